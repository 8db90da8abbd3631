#include "foolset/field.hpp"

#include <string>

namespace foolset {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::Irreversible: return "Irreversible";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotSquare: return "NotSquare";
    case Errc::TooLarge: return "TooLarge";
    case Errc::CellOutsideSupport: return "CellOutsideSupport";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField PrimeField::make(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31)) {
    throw Error(Errc::OutOfRange, "modulus " + std::to_string(p) + " is not below 2^31");
  }
  if (!is_prime(p)) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  }
  return PrimeField(static_cast<std::uint32_t>(p));
}

PrimeField::residue PrimeField::inv(residue a) const {
  if (a % p_ == 0) throw Error(Errc::DivisionByZero, "zero has no inverse");
  // Invariant: old_s * a == old_r (mod p).
  std::int64_t old_r = a % p_, r = p_;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return reduce(old_s);
}

FpElement FpElement::inverse() const { return raw(field_, field_.inv(value_)); }

const FpElement& FpElement::same_field(const FpElement& a, const FpElement& b) {
  if (a.field_ != b.field_) {
    throw Error(Errc::FieldMismatch, "operands live in F_" + std::to_string(a.field_.modulus()) +
                                         " and F_" + std::to_string(b.field_.modulus()));
  }
  return b;
}

}  // namespace foolset
