#include <doctest.h>

#include <array>
#include <iomanip>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "foolset/tensor.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace foolset;

namespace {

Matrix random_matrix(std::mt19937_64& rng, PrimeField F, std::size_t rows, std::size_t cols, int density) {
  std::uniform_int_distribution<std::int64_t> val(1, F.modulus() - 1);
  std::uniform_int_distribution<int> pct(0, 99);
  Matrix m(F, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, pct(rng) < density ? val(rng) : 0);
  }
  return m;
}

// Nonzero diagonal; each off-diagonal pair gets at most one nonzero entry.
Matrix random_fooling(std::mt19937_64& rng, PrimeField F, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> val(1, F.modulus() - 1);
  std::uniform_int_distribution<int> pick(0, 2);
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, val(rng));
    for (std::size_t j = i + 1; j < n; ++j) {
      const int c = pick(rng);
      if (c == 1) m.set(i, j, val(rng));
      if (c == 2) m.set(j, i, val(rng));
    }
  }
  return m;
}

// log(n) / log(r) to 10 decimals, computed with 50-digit decimal floats.
std::string reference_exponent(int n, int r) {
  using big = boost::multiprecision::cpp_dec_float_50;
  const big v = boost::multiprecision::log(big(n)) / boost::multiprecision::log(big(r));
  std::ostringstream os;
  os << std::fixed << std::setprecision(10) << v;
  return os.str();
}

}  // namespace

TEST_CASE("kron examples") {
  const auto f2 = PrimeField::make(2);
  CHECK(kron(Matrix::identity(f2, 2), Matrix::identity(f2, 2)) == Matrix::identity(f2, 4));
  const auto m = construct(2, 1).matrix;
  CHECK(kron(m, Matrix::identity(f2, 1)) == m);
  CHECK(kron(Matrix::identity(f2, 1), m) == m);

  const auto sq = kron(m, m);
  CHECK(sq.rows() == 49);
  CHECK(sq.cols() == 49);
  CHECK(verify_fooling(sq).pass());
  CHECK(rank_mod_p(sq) == 9);
  CHECK(49 <= 9 * 9);
}

TEST_CASE("kron entries follow the left-major index convention") {
  std::mt19937_64 rng(61);
  const auto F = PrimeField::make(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    const auto a = random_matrix(rng, F, dim(rng), dim(rng), 60);
    const auto b = random_matrix(rng, F, dim(rng), dim(rng), 60);
    const auto k = kron(a, b);
    REQUIRE(k.rows() == a.rows() * b.rows());
    REQUIRE(k.cols() == a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t ii = 0; ii < b.rows(); ++ii) {
          for (std::size_t jj = 0; jj < b.cols(); ++jj) {
            REQUIRE(k(i * b.rows() + ii, j * b.cols() + jj) == oracle::mod(std::int64_t{a(i, j)} * b(ii, jj), 7));
          }
        }
      }
    }
  }
}

TEST_CASE("kron errors") {
  const auto f2 = PrimeField::make(2), f3 = PrimeField::make(3);
  CHECK(code_of([&] { kron(Matrix::identity(f2, 2), Matrix::identity(f3, 2)); }) == Errc::FieldMismatch);
  CHECK(code_of([&] { kron(Matrix::identity(f2, 100), Matrix::identity(f2, 100)); }) == Errc::SizeLimit);
  CHECK(code_of([&] { kron(Matrix::identity(f2, 10), Matrix::identity(f2, 10), 99); }) == Errc::SizeLimit);
  CHECK(kron(Matrix::identity(f2, 10), Matrix::identity(f2, 10), 100).rows() == 100);
}

TEST_CASE("tensor_power") {
  const auto f2 = PrimeField::make(2);
  const auto m = construct(2, 1).matrix;
  CHECK(tensor_power(m, 1) == m);
  CHECK(tensor_power(Matrix::identity(f2, 2), 3) == Matrix::identity(f2, 8));
  CHECK(tensor_power(m, 2) == kron(m, m));
  CHECK(code_of([&] { tensor_power(Matrix::identity(f2, 2), 13); }) == Errc::SizeLimit);
  CHECK(code_of([&] { tensor_power(m, 0); }) == Errc::OutOfRange);
}

TEST_CASE("exponent_estimate") {
  const auto a = exponent_estimate(6, 3);
  CHECK(a.decimal.starts_with("1.6309"));
  CHECK(a.decimal == reference_exponent(6, 3));
  CHECK(exponent_estimate(6, 4).decimal.starts_with("1.2924"));
  CHECK(exponent_estimate(6, 4).decimal == reference_exponent(6, 4));
  CHECK(exponent_estimate(7, 3).decimal.starts_with("1.7712"));
  CHECK(exponent_estimate(7, 3).decimal == reference_exponent(7, 3));
  CHECK(exponent_estimate(16, 2).decimal == "4.0000000000");
  CHECK(a.ratios == std::vector<Fraction>{{2, 3}, {4, 9}, {8, 27}, {16, 81}});
  CHECK(code_of([] { exponent_estimate(1, 3); }) == Errc::OutOfRange);
  CHECK(code_of([] { exponent_estimate(6, 1); }) == Errc::OutOfRange);
  CHECK(code_of([] { exponent_estimate(6, 1000); }) == Errc::OutOfRange);
}

TEST_CASE("kron preserves the fooling property") {
  const std::vector<std::pair<std::int64_t, std::int64_t>> grid{
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {7, 1}};
  for (auto [p, t] : grid) {
    const auto b = construct(p, t);
    const auto seed = construct(p, 1).matrix;
    CHECK(verify_fooling(kron(b.matrix, seed)).pass());
  }
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const auto F = PrimeField::make(std::array{2, 3, 5}[trial % 3]);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const auto a = random_fooling(rng, F, dim(rng));
    const auto b = random_fooling(rng, F, dim(rng));
    REQUIRE(verify_fooling(a).pass());
    REQUIRE(verify_fooling(b).pass());
    REQUIRE(verify_fooling(kron(a, b)).pass());
  }
}

TEST_CASE("rank is multiplicative under kron") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    const auto F = PrimeField::make(std::array{2, 3, 5}[trial % 3]);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    std::uniform_int_distribution<int> density(10, 70);
    const auto a = random_matrix(rng, F, dim(rng), dim(rng), density(rng));
    const auto b = random_matrix(rng, F, dim(rng), dim(rng), density(rng));
    REQUIRE(rank_mod_p(kron(a, b)) == rank_mod_p(a) * rank_mod_p(b));
  }
}
