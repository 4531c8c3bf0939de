#pragma once

#include <tuple>

#include "heegaard/integer.hpp"

namespace heegaard {

namespace detail {

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
template <typename Scalar>
std::tuple<Scalar, Scalar, Scalar> extended_gcd(Scalar a, Scalar b) {
  Scalar x0(1), y0(0), x1(0), y1(1);
  while (b != Scalar(0)) {
    const Scalar q = a / b;
    Scalar r = a - q * b;
    a = std::move(b);
    b = std::move(r);
    Scalar x2 = x0 - q * x1;
    Scalar y2 = y0 - q * y1;
    x0 = std::move(x1);
    y0 = std::move(y1);
    x1 = std::move(x2);
    y1 = std::move(y2);
  }
  if (a < Scalar(0)) return {Scalar(-a), Scalar(-x0), Scalar(-y0)};
  return {a, x0, y0};
}

/// floor(a / b) for b > 0.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (a % b != Scalar(0) && a < Scalar(0)) q -= Scalar(1);
  return q;
}

}  // namespace detail

/// Column-style Hermite normal form of the lattice spanned by the columns of R.
///
/// The result H has one column per lattice rank, each column's first nonzero
/// entry (its pivot) is positive and lies strictly below the previous
/// column's pivot, and entries to the left of a pivot satisfy 0 <= h < pivot.
/// Zero columns are dropped, so H has R.rows() rows and rank(R) columns.
template <typename Scalar>
MatrixX<Scalar> hermite_normal_form(const MatrixX<Scalar>& R) {
  MatrixX<Scalar> H = R;
  const Eigen::Index m = H.rows();
  const Eigen::Index n = H.cols();
  Eigen::Index c = 0;
  for (Eigen::Index r = 0; r < m && c < n; ++r) {
    for (Eigen::Index j = c + 1; j < n; ++j) {
      if (H(r, j) == Scalar(0)) continue;
      if (H(r, c) == Scalar(0)) {
        H.col(c).swap(H.col(j));
        continue;
      }
      const Scalar a = H(r, c);
      const Scalar b = H(r, j);
      const auto [g, x, y] = detail::extended_gcd(a, b);
      const Scalar a_g = a / g;
      const Scalar b_g = b / g;
      // [[x, -b/g], [y, a/g]] has determinant 1.
      const VectorX<Scalar> left = H.col(c);
      const VectorX<Scalar> right = H.col(j);
      H.col(c) = x * left + y * right;
      H.col(j) = a_g * right - b_g * left;
    }
    if (H(r, c) == Scalar(0)) continue;
    if (H(r, c) < Scalar(0)) H.col(c) = -H.col(c);
    for (Eigen::Index j = 0; j < c; ++j) {
      const Scalar q = detail::floor_div(H(r, j), H(r, c));
      if (q != Scalar(0)) H.col(j) -= q * H.col(c);
    }
    ++c;
  }
  return H.leftCols(c);
}

/// Membership of v in the lattice spanned by the columns of R, decided by
/// back-substitution against the Hermite normal form.
template <typename Scalar>
bool lattice_member(const MatrixX<Scalar>& R, const VectorX<Scalar>& v) {
  const MatrixX<Scalar> H = hermite_normal_form(R);
  VectorX<Scalar> residual = v;
  Eigen::Index c = 0;
  for (Eigen::Index r = 0; r < H.rows(); ++r) {
    if (c < H.cols() && H(r, c) != Scalar(0)) {
      if (residual(r) % H(r, c) != Scalar(0)) return false;
      const Scalar q = residual(r) / H(r, c);
      residual -= q * H.col(c);
      ++c;
    } else if (residual(r) != Scalar(0)) {
      return false;
    }
  }
  return true;
}

}  // namespace heegaard
