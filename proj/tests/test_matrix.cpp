#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "foolset/matrix.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace foolset;

namespace {

oracle::Grid to_grid(const Matrix& m) {
  oracle::Grid g(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  }
  return g;
}

}  // namespace

TEST_CASE("matrix construction") {
  const auto f5 = PrimeField::make(5);
  const auto m = Matrix::from_rows(f5, {{1, -1, 7}, {0, 5, 2}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(0, 1) == 4);
  CHECK(m(0, 2) == 2);
  CHECK(m(1, 1) == 0);
  CHECK(m.element(0, 0) == FpElement(f5, 1));
  CHECK(code_of([&] { Matrix::from_rows(f5, {{1, 2}, {3}}); }) == Errc::LengthMismatch);
  CHECK(code_of([&] { Matrix(f5, 0, 3); }) == Errc::OutOfRange);
  CHECK(std::all_of(m.data().begin(), m.data().end(), [](auto v) { return v < 5; }));
}

TEST_CASE("rank examples") {
  const auto f2 = PrimeField::make(2), f3 = PrimeField::make(3);
  for (std::size_t n : {1u, 4u, 17u}) CHECK(rank_mod_p(Matrix::identity(f2, n)) == n);
  CHECK(rank_mod_p(Matrix(f3, 4, 4)) == 0);
  // Rank depends on the characteristic: [[1, 1], [1, -1]] is singular mod 2 only.
  CHECK(rank_mod_p(Matrix::from_rows(f2, {{1, 1}, {1, -1}})) == 1);
  CHECK(rank_mod_p(Matrix::from_rows(f3, {{1, 1}, {1, -1}})) == 2);
  // Non-square shapes.
  CHECK(rank_mod_p(Matrix::from_rows(f3, {{1, 2, 0, 1}, {2, 1, 0, 2}})) == 1);
  CHECK(rank_mod_p(Matrix::from_rows(f3, {{1, 0}, {0, 0}, {0, 1}})) == 2);
}

TEST_CASE("rank leaves its input untouched") {
  const auto m = Matrix::from_rows(PrimeField::make(7), {{3, 1, 4}, {1, 5, 6}, {2, 6, 5}});
  const auto copy = m;
  rank_mod_p(m);
  CHECK(m == copy);
}

TEST_CASE("rank agrees with row-space enumeration on random small matrices") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t p = trial % 2 ? 2 : 3;
    const auto F = PrimeField::make(p);
    std::uniform_int_distribution<std::size_t> dim(1, p == 2 ? 7 : 5);
    std::uniform_int_distribution<std::int64_t> val(0, p - 1);
    Matrix m(F, dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, trial % 5 == 0 ? val(rng) * val(rng) % p : val(rng));
    }
    REQUIRE(rank_mod_p(m) == oracle::span_rank(to_grid(m), p));
  }
}

TEST_CASE("permuted and reduced") {
  const auto f7 = PrimeField::make(7);
  const auto m = Matrix::from_rows(f7, {{1, 2, 3}, {4, 5, 6}});
  const std::vector<std::size_t> rp{1, 0}, cp{2, 0, 1};
  const auto q = m.permuted(rp, cp);
  CHECK(q(0, 0) == 6);
  CHECK(q(1, 2) == 2);
  const auto r = m.reduced(PrimeField::make(2));
  CHECK(r(1, 0) == 0);
  CHECK(r(1, 1) == 1);
  CHECK(code_of([&] { m.permuted(cp, cp); }) == Errc::LengthMismatch);
}
