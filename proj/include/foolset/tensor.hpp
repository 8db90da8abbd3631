#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "foolset/fooling.hpp"
#include "foolset/matrix.hpp"

namespace foolset {

/// Kronecker product. Entry (k * B.rows() + k', l * B.cols() + l') is
/// A(k, l) * B(k', l'). Throws Error{FieldMismatch}, or Error{SizeLimit} when
/// either product dimension exceeds `size_limit`.
Matrix kron(const Matrix& a, const Matrix& b, std::size_t size_limit = kDefaultSizeLimit);

/// k-fold Kronecker power, k >= 1.
Matrix tensor_power(const Matrix& m, std::size_t k, std::size_t size_limit = kDefaultSizeLimit);

/// Exponent on the rank obtained by tensoring a size-n0, rank-r0 seed.
struct ExponentEstimate {
  long double value = 0;       // log(n0) / log(r0)
  std::string decimal;         // value rounded to 10 decimals
  std::vector<Fraction> ratios;  // n0^k / (r0^k)^2 for k = 1..4
};

ExponentEstimate exponent_estimate(std::int64_t n0, std::int64_t r0);

}  // namespace foolset
