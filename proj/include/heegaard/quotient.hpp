#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heegaard/integer.hpp"
#include "heegaard/smith.hpp"

namespace heegaard {

/// Canonical element of Z^r + Z/d_1 + ... + Z/d_s.
///
/// `torsion[i]` is a residue in [0, moduli[i]). Unit invariant factors never
/// appear, so equality is componentwise.
struct ClassCoordinate {
  std::vector<Integer> free_part;
  std::vector<Integer> torsion;
  std::vector<Integer> moduli;

  bool is_zero() const;

  /// `0` for the identity; otherwise the free tuple `(a,b)` followed by
  /// `r mod d` terms, joined by ` + `.
  std::string str() const;

  friend bool operator==(const ClassCoordinate&, const ClassCoordinate&) = default;
  /// Lexicographic on (free part, torsion); used to order class reports.
  friend bool operator<(const ClassCoordinate& a, const ClassCoordinate& b);
};

/// Z^n / L for the lattice L spanned by the columns of a relation matrix.
class QuotientGroup {
 public:
  /// Columns of `relations` span L inside Z^{relations.rows()}.
  explicit QuotientGroup(IntMatrix relations);

  Eigen::Index ambient_rank() const { return relations_.rows(); }
  const IntMatrix& relations() const { return relations_; }
  const SmithDecomposition<Integer>& snf() const { return snf_; }

  /// Diagonal entries of D greater than one, in divisibility order.
  const std::vector<Integer>& invariant_factors() const { return invariant_factors_; }
  int free_rank() const { return free_rank_; }

  bool is_trivial() const { return free_rank_ == 0 && invariant_factors_.empty(); }
  /// Group order, empty when the free rank is positive.
  std::optional<Integer> order() const;

  /// Canonical form of v + L, read off U * v using the fixed transform of
  /// this group's SNF.
  ClassCoordinate reduce(const IntVector& v) const;

  /// `0`, `Z`, `Z/3`, `Z^2 + Z/2 + Z/4`.
  std::string str() const;

 private:
  IntMatrix relations_;
  SmithDecomposition<Integer> snf_;
  std::vector<Integer> diagonal_;  // padded to ambient_rank()
  std::vector<Integer> invariant_factors_;
  int free_rank_ = 0;
};

/// Z^{2g} modulo the span of `vectors`; an empty list gives Z^{2g}.
/// Throws InvalidInput when a vector does not have length 2g.
QuotientGroup build_quotient(const std::vector<IntVector>& vectors, int genus);

/// Free-function spelling of QuotientGroup::reduce. Throws InvalidInput on a
/// length mismatch.
ClassCoordinate reduce(const QuotientGroup& q, const IntVector& v);

/// True iff v is an integer combination of `vectors`, decided through the
/// Hermite normal form without touching the Smith decomposition.
bool lattice_member(const std::vector<IntVector>& vectors, const IntVector& v);

}  // namespace heegaard
