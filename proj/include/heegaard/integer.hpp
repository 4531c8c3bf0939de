#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace heegaard {

/// Arbitrary-precision integer used by every exact computation in the library.
/// Expression templates are disabled so the type composes cleanly with Eigen.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;

inline std::string to_string(const Integer& value) { return value.str(); }

/// Exact conversion to a machine integer, empty when the value does not fit.
inline std::optional<std::int64_t> to_int64(const Integer& value) {
  static const Integer lo{std::numeric_limits<std::int64_t>::min()};
  static const Integer hi{std::numeric_limits<std::int64_t>::max()};
  if (value < lo || value > hi) return std::nullopt;
  return value.convert_to<std::int64_t>();
}

/// Column-stacks equal-length vectors into a matrix with `rows` rows.
inline IntMatrix stack_columns(const std::vector<IntVector>& columns, Eigen::Index rows) {
  IntMatrix out(rows, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = columns[c];
  return out;
}

}  // namespace heegaard
