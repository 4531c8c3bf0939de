#pragma once

#include <string>
#include <vector>

#include "heegaard/diagram.hpp"
#include "heegaard/quotient.hpp"

namespace heegaard {

/// A point of T_alpha ∩ T_beta: one intersection point on each
/// (alpha_i, beta_sigma(i)).
struct Generator {
  std::vector<int> sigma;                   // sigma[i-1] = beta index paired with alpha i
  std::vector<IntersectionPoint> points;    // points[i-1] lies on alpha i
  std::string id;                           // "{a,b,c}", labels ascending

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Canonical id for a set of point labels: sorted, comma-joined, in braces.
std::string generator_id(std::vector<std::string> labels);

/// H_1 of the three-manifold: Z^{2g} modulo the classes of all alpha and beta
/// curves.
QuotientGroup manifold_h1(const HeegaardDiagram& d);

/// Every generator, sorted by id. Branches are cut as soon as some alpha_i has
/// no point on any still-unused beta curve.
std::vector<Generator> enumerate_generators(const HeegaardDiagram& d);

/// Looks a generator up by its id or by an unordered label list.
/// Returns nullptr when no generator matches.
const Generator* find_generator(const std::vector<Generator>& gens, const std::string& id_or_labels);

/// Unreduced class in Z^{2g}: sum over i of the alpha_i prefix of length k_i
/// and the beta_sigma(i) suffix after position l_sigma(i).
/// Throws InvalidInput when x is not a generator of d.
IntVector generator_vector(const HeegaardDiagram& d, const Generator& x);

/// generator_vector reduced into H_1(M).
ClassCoordinate generator_coordinate(const HeegaardDiagram& d, const Generator& x,
                                     const QuotientGroup& q);
ClassCoordinate generator_coordinate(const HeegaardDiagram& d, const Generator& x);

/// A Whitney disk joins x and y exactly when their coordinates agree.
bool whitney_exists(const HeegaardDiagram& d, const Generator& x, const Generator& y,
                    const QuotientGroup& q);
bool whitney_exists(const HeegaardDiagram& d, const Generator& x, const Generator& y);

/// sgn(sigma) times the product of the point signs.
int generator_sign(const Generator& x);

/// Maslov index mod 2 of any disk from x to y: 0 when the signs agree.
/// Throws NoWhitneyDisk if x and y lie in different classes.
int maslov_parity(const HeegaardDiagram& d, const Generator& x, const Generator& y,
                  const QuotientGroup& q);
int maslov_parity(const HeegaardDiagram& d, const Generator& x, const Generator& y);

struct GeneratorEntry {
  std::string id;
  std::vector<int> sigma;
  ClassCoordinate coordinate;
  int sign = 1;
};

struct ClassEntry {
  ClassCoordinate coordinate;
  std::vector<std::string> members;  // ids, ascending
};

struct ClassReport {
  int genus = 1;
  QuotientGroup quotient;
  std::vector<GeneratorEntry> generators;  // by id
  std::vector<ClassEntry> classes;         // by coordinate
};

/// Groups generators by coordinate.
ClassReport partition_classes(const HeegaardDiagram& d);

}  // namespace heegaard
