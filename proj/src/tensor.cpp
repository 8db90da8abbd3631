#include "foolset/tensor.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace foolset {

Matrix kron(const Matrix& a, const Matrix& b, std::size_t size_limit) {
  if (a.field() != b.field()) {
    throw Error(Errc::FieldMismatch, "kron over F_" + std::to_string(a.field().modulus()) +
                                         " and F_" + std::to_string(b.field().modulus()));
  }
  const std::size_t rows = a.rows() * b.rows(), cols = a.cols() * b.cols();
  if (rows > size_limit || cols > size_limit) {
    throw Error(Errc::SizeLimit, std::to_string(rows) + "x" + std::to_string(cols) +
                                     " product exceeds the limit " + std::to_string(size_limit));
  }
  const PrimeField F = a.field();
  Matrix out(F, rows, cols);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const auto s = a(k, l);
      if (s == 0) continue;
      for (std::size_t kk = 0; kk < b.rows(); ++kk) {
        for (std::size_t ll = 0; ll < b.cols(); ++ll) {
          out.set(k * b.rows() + kk, l * b.cols() + ll, F.mul(s, b(kk, ll)));
        }
      }
    }
  }
  return out;
}

Matrix tensor_power(const Matrix& m, std::size_t k, std::size_t size_limit) {
  if (k < 1) throw Error(Errc::OutOfRange, "tensor power needs k >= 1");
  Matrix out = m;
  for (std::size_t i = 1; i < k; ++i) out = kron(out, m, size_limit);
  return out;
}

ExponentEstimate exponent_estimate(std::int64_t n0, std::int64_t r0) {
  if (n0 < 2 || r0 < 2) throw Error(Errc::OutOfRange, "exponent estimate needs n0, r0 >= 2");
  ExponentEstimate e;
  e.value = std::log(static_cast<long double>(n0)) / std::log(static_cast<long double>(r0));
  std::ostringstream os;
  os << std::fixed << std::setprecision(10) << e.value;
  e.decimal = os.str();
  std::int64_t n = 1, r2 = 1;
  for (int k = 1; k <= 4; ++k) {
    if (__builtin_mul_overflow(n, n0, &n) || __builtin_mul_overflow(r2, r0, &r2) ||
        __builtin_mul_overflow(r2, r0, &r2)) {
      throw Error(Errc::OutOfRange, "tensor-power ratios overflow 64-bit integers");
    }
    e.ratios.emplace_back(n, r2);
  }
  return e;
}

}  // namespace foolset
