#include "heegaard/floer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace heegaard {

std::string generator_id(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ',';
    out += labels[i];
  }
  return out + "}";
}

QuotientGroup manifold_h1(const HeegaardDiagram& d) {
  check_diagram(d);
  std::vector<IntVector> curves;
  for (const auto& a : d.alpha) curves.push_back(abelianize(a, d.genus));
  for (const auto& b : d.beta) curves.push_back(abelianize(b, d.genus));
  return build_quotient(curves, d.genus);
}

namespace {

void extend(const HeegaardDiagram& d, std::size_t alpha, std::vector<bool>& used,
            std::vector<int>& sigma, std::vector<IntersectionPoint>& chosen,
            std::vector<Generator>& out) {
  const auto g = static_cast<std::size_t>(d.genus);
  if (alpha == g) {
    std::vector<std::string> labels;
    for (const auto& p : chosen) labels.push_back(p.label);
    out.push_back({sigma, chosen, generator_id(std::move(labels))});
    return;
  }
  for (std::size_t beta = 0; beta < g; ++beta) {
    if (used[beta]) continue;
    const auto candidates = d.points_on(static_cast<int>(alpha + 1), static_cast<int>(beta + 1));
    if (candidates.empty()) continue;
    used[beta] = true;
    sigma.push_back(static_cast<int>(beta + 1));
    for (const auto* p : candidates) {
      chosen.push_back(*p);
      extend(d, alpha + 1, used, sigma, chosen, out);
      chosen.pop_back();
    }
    sigma.pop_back();
    used[beta] = false;
  }
}

/// Throws InvalidInput unless x is a well-formed generator built from points of d.
void check_generator(const HeegaardDiagram& d, const Generator& x) {
  const auto g = static_cast<std::size_t>(d.genus);
  if (x.sigma.size() != g || x.points.size() != g) {
    throw InvalidInput("generator " + x.id + " does not have " + std::to_string(g) + " points");
  }
  std::vector<bool> seen(g, false);
  for (std::size_t i = 0; i < g; ++i) {
    const int j = x.sigma[i];
    if (j < 1 || j > d.genus || seen[static_cast<std::size_t>(j - 1)]) {
      throw InvalidInput("generator " + x.id + " has no valid permutation");
    }
    seen[static_cast<std::size_t>(j - 1)] = true;
    const auto& p = x.points[i];
    const auto* q = d.find_point(p.label);
    if (q == nullptr || !(*q == p) || p.alpha != static_cast<int>(i + 1) || p.beta != j) {
      throw InvalidInput("generator " + x.id + " is not a generator of this diagram");
    }
  }
}

}  // namespace

std::vector<Generator> enumerate_generators(const HeegaardDiagram& d) {
  check_diagram(d);
  const auto g = static_cast<std::size_t>(d.genus);
  std::vector<Generator> out;
  std::vector<bool> used(g, false);
  std::vector<int> sigma;
  std::vector<IntersectionPoint> chosen;
  extend(d, 0, used, sigma, chosen, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

const Generator* find_generator(const std::vector<Generator>& gens, const std::string& id_or_labels) {
  std::string_view s = id_or_labels;
  if (s.starts_with('{') && s.ends_with('}')) s = s.substr(1, s.size() - 2);
  std::vector<std::string> labels;
  std::string current;
  for (char c : s) {
    if (c == ',') {
      labels.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  labels.push_back(current);
  const std::string id = generator_id(std::move(labels));
  const auto it = std::lower_bound(gens.begin(), gens.end(), id,
                                   [](const Generator& x, const std::string& v) { return x.id < v; });
  return it != gens.end() && it->id == id ? &*it : nullptr;
}

IntVector generator_vector(const HeegaardDiagram& d, const Generator& x) {
  check_generator(d, x);
  IntVector sum = IntVector::Zero(2 * d.genus);
  for (const auto& p : x.points) {
    sum += prefix_vector(d.alpha[static_cast<std::size_t>(p.alpha - 1)], p.prefix, d.genus);
    sum += suffix_vector(d.beta[static_cast<std::size_t>(p.beta - 1)], p.suffix, d.genus);
  }
  return sum;
}

ClassCoordinate generator_coordinate(const HeegaardDiagram& d, const Generator& x,
                                     const QuotientGroup& q) {
  return q.reduce(generator_vector(d, x));
}

ClassCoordinate generator_coordinate(const HeegaardDiagram& d, const Generator& x) {
  return generator_coordinate(d, x, manifold_h1(d));
}

bool whitney_exists(const HeegaardDiagram& d, const Generator& x, const Generator& y,
                    const QuotientGroup& q) {
  return generator_coordinate(d, x, q) == generator_coordinate(d, y, q);
}

bool whitney_exists(const HeegaardDiagram& d, const Generator& x, const Generator& y) {
  return whitney_exists(d, x, y, manifold_h1(d));
}

int generator_sign(const Generator& x) {
  // sgn(sigma) = (-1)^(g - number of cycles)
  const auto g = x.sigma.size();
  std::vector<bool> visited(g, false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < g; ++i) {
    if (visited[i]) continue;
    ++cycles;
    for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(x.sigma[j] - 1)) visited[j] = true;
  }
  int sign = (g - cycles) % 2 == 0 ? 1 : -1;
  for (const auto& p : x.points) sign *= p.sign;
  return sign;
}

int maslov_parity(const HeegaardDiagram& d, const Generator& x, const Generator& y,
                  const QuotientGroup& q) {
  if (!whitney_exists(d, x, y, q)) {
    throw NoWhitneyDisk("no Whitney disk connects " + x.id + " and " + y.id);
  }
  return generator_sign(x) == generator_sign(y) ? 0 : 1;
}

int maslov_parity(const HeegaardDiagram& d, const Generator& x, const Generator& y) {
  return maslov_parity(d, x, y, manifold_h1(d));
}

ClassReport partition_classes(const HeegaardDiagram& d) {
  ClassReport report{d.genus, manifold_h1(d), {}, {}};
  for (const auto& x : enumerate_generators(d)) {
    report.generators.push_back(
        {x.id, x.sigma, generator_coordinate(d, x, report.quotient), generator_sign(x)});
  }
  std::map<ClassCoordinate, std::vector<std::string>> groups;
  for (const auto& e : report.generators) groups[e.coordinate].push_back(e.id);
  for (auto& [coordinate, members] : groups) report.classes.push_back({coordinate, std::move(members)});
  return report;
}

}  // namespace heegaard
