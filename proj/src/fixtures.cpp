#include <cstdlib>
#include <numeric>
#include <regex>

#include "heegaard/diagram.hpp"

namespace heegaard {

namespace {

constexpr int kLensMaxOrder = 12;

Word power(int generator, int exponent) {
  return Word(std::vector<Letter>(static_cast<std::size_t>(std::abs(exponent)),
                                  Letter{generator, exponent < 0 ? -1 : 1}));
}

HeegaardDiagram s3() {
  HeegaardDiagram d;
  d.genus = 1;
  d.alpha = {power(1, 1)};
  d.beta = {power(2, 1)};
  d.points = {{"x0", 1, 1, 1, 1, 1}};
  return d;
}

HeegaardDiagram s1xs2() {
  HeegaardDiagram d;
  d.genus = 1;
  d.alpha = {power(1, 1)};
  d.beta = {power(1, 1)};
  return d;
}

// alpha = c1 against the (q, p) curve c1^q c2^p. The alpha curve is crossed
// once per pass of beta through the c2 run, p times in all.
HeegaardDiagram lens(int p, int q) {
  HeegaardDiagram d;
  d.genus = 1;
  d.alpha = {power(1, 1)};
  d.beta = {power(1, q) * power(2, p)};
  for (int i = 0; i < p; ++i) {
    d.points.push_back({"x" + std::to_string(i), 1, 1, 1, static_cast<std::size_t>(q + i), 1});
  }
  return d;
}

// Genus-2 splitting of S^3 (c1/c2 and c3/c4 pairs) after a finger move of
// beta 2 across alpha 2, which adds a cancelling pair of crossings.
HeegaardDiagram s3_genus2_stab() {
  HeegaardDiagram d;
  d.genus = 2;
  d.alpha = {power(1, 1), power(3, 1)};
  d.beta = {power(2, 1), power(4, 1)};
  d.points = {
      {"p", 1, 1, 1, 1, 1},
      {"q0", 2, 2, 1, 1, 1},
      {"q1", 2, 2, 1, 0, -1},
      {"q2", 2, 2, 0, 0, 1},
  };
  return d;
}

bool lens_admissible(int p, int q) {
  return p >= 2 && p <= kLensMaxOrder && q >= 1 && q < p && std::gcd(p, q) == 1;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"s3", "s1xs2", "s3-genus2-stab", "lens-p-q"}; }

std::vector<std::string> all_fixture_names() {
  std::vector<std::string> out = {"s3", "s1xs2", "s3-genus2-stab"};
  for (int p = 2; p <= kLensMaxOrder; ++p) {
    for (int q = 1; q < p; ++q) {
      if (lens_admissible(p, q)) out.push_back("lens-" + std::to_string(p) + "-" + std::to_string(q));
    }
  }
  return out;
}

HeegaardDiagram fixture(std::string_view name) {
  HeegaardDiagram d;
  if (name == "s3") {
    d = s3();
  } else if (name == "s1xs2") {
    d = s1xs2();
  } else if (name == "s3-genus2-stab") {
    d = s3_genus2_stab();
  } else {
    static const std::regex lens_re(R"(lens-(\d{1,3})-(\d{1,3}))");
    std::cmatch m;
    if (!std::regex_match(name.begin(), name.end(), m, lens_re) ||
        !lens_admissible(std::stoi(m[1]), std::stoi(m[2]))) {
      std::string known;
      for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
      throw UnknownFixture("unknown fixture '" + std::string(name) + "' (available: " + known +
                           "; lens needs 2 <= p <= 12, 1 <= q < p, gcd(p,q) = 1)");
    }
    d = lens(std::stoi(m[1]), std::stoi(m[2]));
  }
  d.canonicalize();
  return d;
}

}  // namespace heegaard
