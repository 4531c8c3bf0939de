#include <doctest.h>

#include <random>

#include "heegaard/smith.hpp"
#include "support/oracles.hpp"

using namespace heegaard;

namespace {

template <typename Scalar>
void check_decomposition(const MatrixX<Scalar>& R, const SmithDecomposition<Scalar>& s) {
  REQUIRE(s.U.rows() == R.rows());
  REQUIRE(s.V.rows() == R.cols());
  CHECK(MatrixX<Scalar>(s.U * R * s.V) == s.D);
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == Scalar(0));
  const auto diag = s.diagonal(std::min(R.rows(), R.cols()));
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= Scalar(0));
    if (i + 1 < diag.size()) {
      if (diag[i] == Scalar(0)) {
        CHECK(diag[i + 1] == Scalar(0));
      } else {
        CHECK(diag[i + 1] % diag[i] == Scalar(0));
      }
    }
  }
}

}  // namespace

TEST_CASE("smith normal form of small examples") {
  IntMatrix id = IntMatrix::Identity(2, 2);
  auto s = smith_normal_form(id);
  CHECK(s.D == id);
  check_decomposition(id, s);

  IntMatrix r(2, 2);
  r << 2, 4, 6, 8;
  s = smith_normal_form(r);
  check_decomposition(r, s);
  const auto expected = oracle::determinantal_invariants({{2, 4}, {6, 8}}, 2, 2);
  REQUIRE(expected == std::vector<std::int64_t>{2, 4});
  CHECK(s.D(0, 0) == 2);
  CHECK(s.D(1, 1) == 4);

  IntMatrix z = IntMatrix::Zero(3, 2);
  s = smith_normal_form(z);
  CHECK(s.D == z);
  check_decomposition(z, s);
}

TEST_CASE("smith normal form handles empty and rectangular shapes") {
  IntMatrix no_columns(3, 0);
  auto s = smith_normal_form(no_columns);
  CHECK(s.U == IntMatrix::Identity(3, 3));
  CHECK(s.D.cols() == 0);
  CHECK(s.diagonal(3) == std::vector<Integer>{0, 0, 0});

  IntMatrix row(1, 3);
  row << 6, 10, 15;
  s = smith_normal_form(row);
  check_decomposition(row, s);
  CHECK(s.D(0, 0) == 1);
}

TEST_CASE("smith normal form is deterministic") {
  IntMatrix r(3, 3);
  r << 4, -6, 2, 8, 3, -5, 0, 7, 9;
  const auto a = smith_normal_form(r);
  const auto b = smith_normal_form(r);
  CHECK(a.U == b.U);
  CHECK(a.V == b.V);
  CHECK(a.D == b.D);
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = std::uniform_int_distribution<int>(1, 5)(rng);
    const int cols = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto small = oracle::random_small_matrix(rng, rows, cols, 9);
    const IntMatrix R = oracle::to_int_matrix(small, rows, cols);
    const auto s = smith_normal_form(R);
    check_decomposition(R, s);
    CHECK(abs(oracle::determinant(s.U)) == 1);
    CHECK(abs(oracle::determinant(s.V)) == 1);
    const auto expected = oracle::determinantal_invariants(small, rows, cols);
    const auto diag = s.diagonal(std::min(rows, cols));
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(diag[i] == expected[i]);
  }
}

TEST_CASE("smith normal form is generic over the scalar") {
  Eigen::MatrixXi r(2, 3);
  r << 2, 4, 4, -6, 6, 12;
  const auto s = smith_normal_form<int>(r);
  check_decomposition<int>(r, s);
  CHECK(s.D(0, 0) == 2);
  CHECK(s.D(1, 1) == 6);

  MatrixX<long long> big(2, 2);
  big << 3, 0, 0, 5;
  const auto t = smith_normal_form(big);
  CHECK(t.D(0, 0) == 1);
  CHECK(t.D(1, 1) == 15);
}
