#pragma once

#include <random>
#include <string>

#include "heegaard/diagram.hpp"

namespace heegaard::testing {

inline Word random_word(std::mt19937& rng, int genus, int max_length) {
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<int> generator(1, 2 * genus);
  std::bernoulli_distribution positive(0.5);
  std::vector<Letter> letters(static_cast<std::size_t>(length(rng)));
  for (auto& l : letters) l = {generator(rng), positive(rng) ? 1 : -1};
  return Word(std::move(letters));
}

/// Random structurally valid diagram: genus 1..max_genus, nonempty words of
/// length <= max_length, 0..max_points points on each (alpha_i, beta_j).
inline HeegaardDiagram random_diagram(std::mt19937& rng, int max_genus = 3, int max_length = 6,
                                      int max_points = 4) {
  HeegaardDiagram d;
  d.genus = std::uniform_int_distribution<int>(1, max_genus)(rng);
  for (int i = 0; i < d.genus; ++i) d.alpha.push_back(random_word(rng, d.genus, max_length));
  for (int j = 0; j < d.genus; ++j) d.beta.push_back(random_word(rng, d.genus, max_length));
  std::uniform_int_distribution<int> count(0, max_points);
  std::bernoulli_distribution positive(0.5);
  int next = 0;
  for (int i = 1; i <= d.genus; ++i) {
    for (int j = 1; j <= d.genus; ++j) {
      const int n = count(rng);
      for (int c = 0; c < n; ++c) {
        IntersectionPoint p;
        p.label = "p" + std::to_string(next++);
        p.alpha = i;
        p.beta = j;
        p.prefix = std::uniform_int_distribution<std::size_t>(0, d.alpha[static_cast<std::size_t>(i - 1)].size())(rng);
        p.suffix = std::uniform_int_distribution<std::size_t>(0, d.beta[static_cast<std::size_t>(j - 1)].size())(rng);
        p.sign = positive(rng) ? 1 : -1;
        d.points.push_back(std::move(p));
      }
    }
  }
  d.canonicalize();
  return d;
}

/// Rotates beta_j left by one letter and moves every l on it back by one,
/// wrapping 0 to n_j - 1.
inline HeegaardDiagram rotate_beta(const HeegaardDiagram& d, int j) {
  HeegaardDiagram out = d;
  auto& word = out.beta[static_cast<std::size_t>(j - 1)];
  const std::size_t n = word.size();
  word = word.rotated(1);
  for (auto& p : out.points) {
    if (p.beta != j) continue;
    p.suffix = p.suffix == 0 ? n - 1 : p.suffix - 1;
  }
  return out;
}

}  // namespace heegaard::testing
