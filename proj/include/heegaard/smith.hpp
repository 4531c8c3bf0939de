#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "heegaard/integer.hpp"

namespace heegaard {

/// U * R * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., zeros last.
template <typename Scalar>
struct SmithDecomposition {
  MatrixX<Scalar> U;
  MatrixX<Scalar> D;
  MatrixX<Scalar> V;

  /// Diagonal of D padded with zeros to `length` entries (the row count of R
  /// when `length` is negative).
  std::vector<Scalar> diagonal(Eigen::Index length = -1) const {
    if (length < 0) length = D.rows();
    std::vector<Scalar> out(static_cast<std::size_t>(length), Scalar(0));
    const Eigen::Index n = std::min({D.rows(), D.cols(), length});
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = D(i, i);
    return out;
  }
};

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

/// Least nonzero |entry| of the block [t.., t..]; ties go to the lowest row,
/// then the lowest column.
template <typename Scalar>
std::optional<std::pair<Eigen::Index, Eigen::Index>> smallest_pivot(const MatrixX<Scalar>& a,
                                                                    Eigen::Index t) {
  std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
  Scalar best_value(0);
  for (Eigen::Index i = t; i < a.rows(); ++i) {
    for (Eigen::Index j = t; j < a.cols(); ++j) {
      if (a(i, j) == Scalar(0)) continue;
      const Scalar m = magnitude(a(i, j));
      if (!best || m < best_value) {
        best = {i, j};
        best_value = m;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Smith normal form by repeated least-magnitude pivoting.
///
/// Each stage moves the smallest nonzero entry of the trailing block to the
/// diagonal, clears its row and column by Euclidean division, and restarts
/// whenever a remainder survives. Once the cross is clear, an entry of the
/// block not divisible by the pivot is folded into the pivot row, which forces
/// a smaller pivot on the next pass. The output is a pure function of R.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const MatrixX<Scalar>& R) {
  const Eigen::Index m = R.rows();
  const Eigen::Index n = R.cols();
  SmithDecomposition<Scalar> out{MatrixX<Scalar>::Identity(m, m), R, MatrixX<Scalar>::Identity(n, n)};
  auto& U = out.U;
  auto& D = out.D;
  auto& V = out.V;

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      const auto pivot = detail::smallest_pivot(D, t);
      if (!pivot) return out;  // trailing block is zero
      const auto [pr, pc] = *pivot;
      if (pr != t) {
        D.row(t).swap(D.row(pr));
        U.row(t).swap(U.row(pr));
      }
      if (pc != t) {
        D.col(t).swap(D.col(pc));
        V.col(t).swap(V.col(pc));
      }

      bool cross_clear = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        const Scalar q = D(i, t) / D(t, t);
        if (q != Scalar(0)) {
          D.row(i) -= q * D.row(t);
          U.row(i) -= q * U.row(t);
        }
        if (D(i, t) != Scalar(0)) cross_clear = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        const Scalar q = D(t, j) / D(t, t);
        if (q != Scalar(0)) {
          D.col(j) -= q * D.col(t);
          V.col(j) -= q * V.col(t);
        }
        if (D(t, j) != Scalar(0)) cross_clear = false;
      }
      if (!cross_clear) continue;

      bool divides_block = true;
      for (Eigen::Index i = t + 1; i < m && divides_block; ++i) {
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (D(i, j) % D(t, t) != Scalar(0)) {
            D.row(t) += D.row(i);
            U.row(t) += U.row(i);
            divides_block = false;
            break;
          }
        }
      }
      if (divides_block) break;
    }
    if (D(t, t) < Scalar(0)) {
      D.row(t) = -D.row(t);
      U.row(t) = -U.row(t);
    }
  }
  return out;
}

}  // namespace heegaard
