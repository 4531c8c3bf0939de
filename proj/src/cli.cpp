#include "heegaard/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

namespace heegaard::cli {

namespace {

using json = nlohmann::ordered_json;

/// Exact JSON value: a number when it fits in 64 bits, else a decimal string.
json integer_json(const Integer& v) {
  if (const auto small = to_int64(v)) return *small;
  return to_string(v);
}

json integers_json(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(integer_json(v));
  return out;
}

json h1_json(const QuotientGroup& q) {
  return {{"rank", q.free_rank()}, {"torsion", integers_json(q.invariant_factors())}};
}

json coordinate_json(const ClassCoordinate& c) {
  return {{"free", integers_json(c.free_part)}, {"torsion", integers_json(c.torsion)}, {"text", c.str()}};
}

char sign_char(int sign) { return sign > 0 ? '+' : '-'; }

std::string sigma_text(const std::vector<int>& sigma) {
  std::string out = "[";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(sigma[i]);
  }
  return out + "]";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i > 0 ? sep : "") + parts[i];
  return out;
}

/// Left-aligned columns padded to the widest cell, two spaces apart.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

json report_json(const ClassReport& report, bool with_classes) {
  json out = {{"genus", report.genus}, {"h1", h1_json(report.quotient)}};
  json gens = json::array();
  for (const auto& g : report.generators) {
    gens.push_back({{"id", g.id}, {"sigma", g.sigma}, {"coordinate", coordinate_json(g.coordinate)},
                    {"sign", g.sign}});
  }
  out["generators"] = std::move(gens);
  if (with_classes) {
    json classes = json::array();
    for (const auto& c : report.classes) {
      classes.push_back({{"coordinate", coordinate_json(c.coordinate)}, {"members", c.members}});
    }
    out["classes"] = std::move(classes);
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

class UsageError : public Error {
 public:
  using Error::Error;
};

Format parse_format(const std::string& name, std::initializer_list<Format> allowed, const std::string& command) {
  static const std::map<std::string, Format> formats = {
      {"table", Format::table}, {"json", Format::json}, {"dot", Format::dot}};
  const auto it = formats.find(name);
  if (it == formats.end() || std::find(allowed.begin(), allowed.end(), it->second) == allowed.end()) {
    throw UsageError("format '" + name + "' is not supported by '" + command + "'");
  }
  return it->second;
}

HeegaardDiagram load(const std::string& path) {
  if (path == "-") return parse_diagram(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return parse_diagram(in);
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.line(), path + ": " + e.what());
  }
}

}  // namespace

std::string render_h1(const QuotientGroup& q, int genus, Format format) {
  if (format == Format::json) {
    return json{{"genus", genus}, {"h1", h1_json(q)}}.dump(2) + "\n";
  }
  return "H1 = " + q.str() + "\n";
}

std::string render_generators(const ClassReport& report, Format format) {
  if (format == Format::json) return report_json(report, false).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows = {{"id", "sigma", "sign", "coordinate"}};
  for (const auto& g : report.generators) {
    rows.push_back({g.id, sigma_text(g.sigma), std::string(1, sign_char(g.sign)), g.coordinate.str()});
  }
  return table(rows);
}

std::string render_classes(const ClassReport& report, Format format) {
  switch (format) {
    case Format::json:
      return report_json(report, true).dump(2) + "\n";
    case Format::dot: {
      std::map<std::string, int> sign_of;
      for (const auto& g : report.generators) sign_of[g.id] = g.sign;
      std::ostringstream out;
      out << "graph classes {\n";
      for (std::size_t c = 0; c < report.classes.size(); ++c) {
        for (const auto& id : report.classes[c].members) {
          out << "  " << dot_quote(id) << " [label=" << dot_quote(id + " " + sign_char(sign_of[id]))
              << ", class=" << c << "];\n";
        }
      }
      for (const auto& cls : report.classes) {
        for (std::size_t a = 0; a < cls.members.size(); ++a) {
          for (std::size_t b = a + 1; b < cls.members.size(); ++b) {
            out << "  " << dot_quote(cls.members[a]) << " -- " << dot_quote(cls.members[b]) << ";\n";
          }
        }
      }
      out << "}\n";
      return out.str();
    }
    case Format::table:
      break;
  }
  std::map<std::string, int> sign_of;
  for (const auto& g : report.generators) sign_of[g.id] = g.sign;
  std::vector<std::vector<std::string>> rows = {{"coordinate", "size", "generators", "signs"}};
  for (const auto& cls : report.classes) {
    std::string signs;
    for (const auto& id : cls.members) signs += sign_char(sign_of[id]);
    rows.push_back({cls.coordinate.str(), std::to_string(cls.members.size()), join(cls.members, " "), signs});
  }
  return "H1 = " + report.quotient.str() + "\n" + table(rows);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heegaard diagram homology, generator classes and Whitney disks", "hd"};
  app.require_subcommand(1);
  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format: table, json or dot")
      ->check(CLI::IsMember({"table", "json", "dot"}));

  std::string file;
  std::string x_id;
  std::string y_id;
  std::string fixture_name;
  std::string output_path;

  auto* h1 = app.add_subcommand("h1", "Print H1 of the three-manifold");
  auto* gens = app.add_subcommand("gens", "List generators with sign and coordinate");
  auto* classes = app.add_subcommand("classes", "Partition generators by Whitney-disk class");
  auto* whitney = app.add_subcommand("whitney", "Decide whether a Whitney disk joins two generators");
  auto* parity = app.add_subcommand("parity", "Maslov index parity of disks between two generators");
  auto* fixture_cmd = app.add_subcommand("fixture", "Write a built-in diagram");
  auto* validate_cmd = app.add_subcommand("validate", "Report reduction and position warnings");
  for (auto* sub : {h1, gens, classes, whitney, parity, validate_cmd}) {
    sub->add_option("file", file, "Diagram file (.hd), '-' for standard input")->required();
    sub->fallthrough();
  }
  for (auto* sub : {whitney, parity}) {
    sub->add_option("x", x_id, "Generator id or comma-joined labels")->required();
    sub->add_option("y", y_id, "Generator id or comma-joined labels")->required();
  }
  fixture_cmd->add_option("name", fixture_name, "Fixture name")->required();
  fixture_cmd->add_option("-o,--output", output_path, "Output path (default: standard output)");
  fixture_cmd->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : parse_failure;
  }

  try {
    if (fixture_cmd->parsed()) {
      parse_format(format_name, {Format::table}, "fixture");
      const std::string text = serialize_diagram(fixture(fixture_name));
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream f(output_path, std::ios::binary);
        if (!f || !(f << text)) throw UsageError("cannot write '" + output_path + "'");
      }
      return ok;
    }

    if (h1->parsed()) {
      const Format format = parse_format(format_name, {Format::table, Format::json}, "h1");
      const auto d = load(file);
      out << render_h1(manifold_h1(d), d.genus, format);
      return ok;
    }
    if (gens->parsed()) {
      const Format format = parse_format(format_name, {Format::table, Format::json}, "gens");
      out << render_generators(partition_classes(load(file)), format);
      return ok;
    }
    if (classes->parsed()) {
      const Format format = parse_format(format_name, {Format::table, Format::json, Format::dot}, "classes");
      out << render_classes(partition_classes(load(file)), format);
      return ok;
    }
    if (validate_cmd->parsed()) {
      const Format format = parse_format(format_name, {Format::table, Format::json}, "validate");
      const auto warnings = validate(load(file));
      if (format == Format::json) {
        json list = json::array();
        for (const auto& w : warnings) list.push_back(w.message);
        out << json{{"warnings", list}}.dump(2) << "\n";
      } else if (warnings.empty()) {
        out << "ok\n";
      } else {
        for (const auto& w : warnings) out << "warning: " << w.message << "\n";
      }
      return ok;
    }

    const bool is_whitney = whitney->parsed();
    parse_format(format_name, {Format::table}, is_whitney ? "whitney" : "parity");
    const auto d = load(file);
    const auto all = enumerate_generators(d);
    const Generator* x = find_generator(all, x_id);
    const Generator* y = find_generator(all, y_id);
    if (x == nullptr || y == nullptr) {
      err << "hd: unknown generator '" << (x == nullptr ? x_id : y_id) << "'\n";
      return unknown_name;
    }
    const auto q = manifold_h1(d);
    if (is_whitney) {
      const bool yes = whitney_exists(d, *x, *y, q);
      out << (yes ? "yes" : "no") << "\n";
      return yes ? ok : answer_no;
    }
    out << maslov_parity(d, *x, *y, q) << "\n";
    return ok;
  } catch (const ParseError& e) {
    err << "hd: " << e.what() << "\n";
    return parse_failure;
  } catch (const UsageError& e) {
    err << "hd: " << e.what() << "\n";
    return parse_failure;
  } catch (const UnknownFixture& e) {
    err << "hd: " << e.what() << "\n";
    return unknown_name;
  } catch (const NoWhitneyDisk& e) {
    err << "hd: " << e.what() << "\n";
    return precondition;
  } catch (const Error& e) {
    err << "hd: " << e.what() << "\n";
    return parse_failure;
  }
}

}  // namespace heegaard::cli
