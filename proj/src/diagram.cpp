#include "heegaard/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace heegaard {

std::vector<const IntersectionPoint*> HeegaardDiagram::points_on(int i, int j) const {
  std::vector<const IntersectionPoint*> out;
  for (const auto& p : points) {
    if (p.alpha == i && p.beta == j) out.push_back(&p);
  }
  return out;
}

const IntersectionPoint* HeegaardDiagram::find_point(std::string_view label) const {
  for (const auto& p : points) {
    if (p.label == label) return &p;
  }
  return nullptr;
}

void HeegaardDiagram::canonicalize() {
  std::stable_sort(points.begin(), points.end(),
                   [](const auto& a, const auto& b) { return a.label < b.label; });
}

bool operator==(const HeegaardDiagram& a, const HeegaardDiagram& b) {
  if (a.genus != b.genus || a.alpha != b.alpha || a.beta != b.beta) return false;
  if (a.points.size() != b.points.size()) return false;
  HeegaardDiagram ca = a;
  HeegaardDiagram cb = b;
  ca.canonicalize();
  cb.canonicalize();
  return ca.points == cb.points;
}

void check_diagram(const HeegaardDiagram& d) {
  if (d.genus < 1) throw InvalidDiagram("genus must be at least 1");
  const auto g = static_cast<std::size_t>(d.genus);
  if (d.alpha.size() != g || d.beta.size() != g) {
    throw InvalidDiagram("expected " + std::to_string(g) + " alpha and beta curves");
  }
  const auto check_curves = [&](const std::vector<Word>& words, const char* name) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      const std::string where = std::string(name) + " " + std::to_string(i + 1);
      if (words[i].empty()) throw InvalidDiagram(where + " is empty");
      try {
        check_word(words[i], d.genus);
      } catch (const InvalidWord& e) {
        throw InvalidDiagram(where + ": " + e.what());
      }
    }
  };
  check_curves(d.alpha, "alpha");
  check_curves(d.beta, "beta");

  std::set<std::string> labels;
  for (const auto& p : d.points) {
    if (p.label.empty()) throw InvalidDiagram("point with empty label");
    if (!labels.insert(p.label).second) throw InvalidDiagram("duplicate label '" + p.label + "'");
    const std::string where = "point '" + p.label + "'";
    if (p.alpha < 1 || p.alpha > d.genus) throw InvalidDiagram(where + ": alpha index out of range");
    if (p.beta < 1 || p.beta > d.genus) throw InvalidDiagram(where + ": beta index out of range");
    if (p.prefix > d.alpha[static_cast<std::size_t>(p.alpha - 1)].size()) {
      throw InvalidDiagram(where + ": k exceeds the length of alpha " + std::to_string(p.alpha));
    }
    if (p.suffix > d.beta[static_cast<std::size_t>(p.beta - 1)].size()) {
      throw InvalidDiagram(where + ": l exceeds the length of beta " + std::to_string(p.beta));
    }
    if (p.sign != 1 && p.sign != -1) throw InvalidDiagram(where + ": sign must be + or -");
  }
}

std::vector<Warning> validate(const HeegaardDiagram& d) {
  std::vector<Warning> out;
  for (std::size_t i = 0; i < d.alpha.size(); ++i) {
    if (!d.alpha[i].is_freely_reduced()) {
      out.push_back({Warning::Kind::alpha_not_freely_reduced,
                     "alpha " + std::to_string(i + 1) + " is not freely reduced"});
    }
  }
  for (std::size_t j = 0; j < d.beta.size(); ++j) {
    if (!d.beta[j].is_freely_reduced()) {
      out.push_back({Warning::Kind::beta_not_freely_reduced,
                     "beta " + std::to_string(j + 1) + " is not freely reduced"});
    } else if (!d.beta[j].is_cyclically_reduced()) {
      out.push_back({Warning::Kind::beta_not_cyclically_reduced,
                     "beta " + std::to_string(j + 1) + " is not cyclically reduced"});
    }
  }

  using Position = std::tuple<int, int, std::size_t, std::size_t>;
  std::map<Position, std::vector<std::string>> by_position;
  for (const auto& p : d.points) by_position[{p.alpha, p.beta, p.prefix, p.suffix}].push_back(p.label);
  for (auto& [pos, labels] : by_position) {
    if (labels.size() < 2) continue;
    std::sort(labels.begin(), labels.end());
    std::string joined;
    for (const auto& l : labels) joined += (joined.empty() ? "" : ", ") + l;
    const auto& [i, j, k, l] = pos;
    out.push_back({Warning::Kind::duplicate_position,
                   "points " + joined + " share a" + std::to_string(i) + " b" + std::to_string(j) +
                       " k=" + std::to_string(k) + " l=" + std::to_string(l)});
  }
  return out;
}

ParseError::ParseError(Kind kind, int line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

}  // namespace heegaard
