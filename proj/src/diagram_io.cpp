#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "heegaard/diagram.hpp"

namespace heegaard {

namespace {

using Kind = ParseError::Kind;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Decimal digits to a bounded machine integer; empty on overflow.
template <typename T>
std::optional<T> to_number(const std::string& digits) {
  T value{};
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || end != digits.data() + digits.size()) return std::nullopt;
  return value;
}

struct PendingPoint {
  IntersectionPoint point;
  int line;
};

class Reader {
 public:
  HeegaardDiagram run(std::istream& in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      std::string_view text = raw;
      if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
      text = trim(text);
      if (text.empty()) continue;
      handle(std::string(text));
    }
    return finish();
  }

 private:
  static const std::regex& genus_re() {
    static const std::regex re(R"(genus\s+(\d+))");
    return re;
  }
  static const std::regex& curve_re() {
    static const std::regex re(R"((alpha|beta)\s+(\d+)\s*:(.*))");
    return re;
  }
  static const std::regex& point_re() {
    static const std::regex re(
        R"(x\s+([^\s:,{}]+)\s*:\s*a(\d+)\s+b(\d+)\s+k=(\d+)\s+l=(\d+)\s+sign=([+-]))");
    return re;
  }

  [[noreturn]] void fail(Kind kind, const std::string& what) const { throw ParseError(kind, line_, what); }

  int index_in_range(const std::string& digits, const char* what) const {
    const auto v = to_number<int>(digits);
    if (!v || *v < 1 || *v > genus_) {
      fail(Kind::semantic, std::string(what) + " index " + digits + " outside 1.." + std::to_string(genus_));
    }
    return *v;
  }

  void handle(const std::string& text) {
    std::smatch m;
    if (!genus_) {
      if (!std::regex_match(text, m, genus_re())) fail(Kind::syntax, "expected 'genus <g>'");
      const auto g = to_number<int>(m[1]);
      if (!g || *g < 1) fail(Kind::semantic, "genus must be a positive integer");
      genus_ = *g;
      alpha_.resize(static_cast<std::size_t>(*g));
      beta_.resize(static_cast<std::size_t>(*g));
      return;
    }
    if (std::regex_match(text, m, curve_re())) {
      const bool is_alpha = m[1] == "alpha";
      const char* name = is_alpha ? "alpha" : "beta";
      const int i = index_in_range(m[2], name);
      auto& slot = (is_alpha ? alpha_ : beta_)[static_cast<std::size_t>(i - 1)];
      if (slot) fail(Kind::semantic, std::string(name) + " " + std::to_string(i) + " given twice");
      Word w;
      try {
        w = parse_word(m[3]);
      } catch (const InvalidWord& e) {
        fail(Kind::syntax, e.what());
      }
      if (w.empty()) fail(Kind::semantic, std::string(name) + " " + std::to_string(i) + " is empty");
      try {
        check_word(w, genus_);
      } catch (const InvalidWord& e) {
        fail(Kind::semantic, e.what());
      }
      slot = std::move(w);
      return;
    }
    if (std::regex_match(text, m, point_re())) {
      IntersectionPoint p;
      p.label = m[1];
      for (const auto& q : points_) {
        if (q.point.label == p.label) fail(Kind::semantic, "duplicate label '" + p.label + "'");
      }
      p.alpha = index_in_range(m[2], "alpha");
      p.beta = index_in_range(m[3], "beta");
      const auto k = to_number<std::size_t>(m[4]);
      const auto l = to_number<std::size_t>(m[5]);
      if (!k || !l) fail(Kind::semantic, "position out of range");
      p.prefix = *k;
      p.suffix = *l;
      p.sign = m[6] == "+" ? 1 : -1;
      points_.push_back({std::move(p), line_});
      return;
    }
    if (std::regex_match(text, m, genus_re())) fail(Kind::semantic, "genus given twice");
    fail(Kind::syntax, "unrecognized line '" + text + "'");
  }

  HeegaardDiagram finish() {
    if (!genus_) {
      ++line_;
      fail(Kind::syntax, "missing 'genus <g>' line");
    }
    HeegaardDiagram d;
    d.genus = genus_;
    const int end_line = line_ + 1;
    const auto take = [&](std::vector<std::optional<Word>>& slots, const char* name,
                          std::vector<Word>& into) {
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) {
          throw ParseError(Kind::semantic, end_line,
                           std::string("missing ") + name + " " + std::to_string(i + 1));
        }
        into.push_back(std::move(*slots[i]));
      }
    };
    take(alpha_, "alpha", d.alpha);
    take(beta_, "beta", d.beta);
    for (auto& [p, line] : points_) {
      const auto m = d.alpha[static_cast<std::size_t>(p.alpha - 1)].size();
      const auto n = d.beta[static_cast<std::size_t>(p.beta - 1)].size();
      if (p.prefix > m) {
        throw ParseError(Kind::semantic, line,
                         "k=" + std::to_string(p.prefix) + " exceeds length " + std::to_string(m) +
                             " of alpha " + std::to_string(p.alpha));
      }
      if (p.suffix > n) {
        throw ParseError(Kind::semantic, line,
                         "l=" + std::to_string(p.suffix) + " exceeds length " + std::to_string(n) +
                             " of beta " + std::to_string(p.beta));
      }
      d.points.push_back(std::move(p));
    }
    d.canonicalize();
    check_diagram(d);
    return d;
  }

  int line_ = 0;
  int genus_ = 0;
  std::vector<std::optional<Word>> alpha_;
  std::vector<std::optional<Word>> beta_;
  std::vector<PendingPoint> points_;
};

}  // namespace

HeegaardDiagram parse_diagram(std::istream& in) { return Reader{}.run(in); }

HeegaardDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_diagram(in);
}

std::string serialize_diagram(const HeegaardDiagram& d) {
  HeegaardDiagram c = d;
  c.canonicalize();
  std::ostringstream out;
  out << "genus " << c.genus << '\n';
  for (std::size_t i = 0; i < c.alpha.size(); ++i) out << "alpha " << i + 1 << ": " << c.alpha[i].str() << '\n';
  for (std::size_t j = 0; j < c.beta.size(); ++j) out << "beta " << j + 1 << ": " << c.beta[j].str() << '\n';
  for (const auto& p : c.points) {
    out << "x " << p.label << ": a" << p.alpha << " b" << p.beta << " k=" << p.prefix
        << " l=" << p.suffix << " sign=" << (p.sign > 0 ? '+' : '-') << '\n';
  }
  return out.str();
}

}  // namespace heegaard
