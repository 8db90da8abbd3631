#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "foolset/error.hpp"

namespace foolset {

/// The prime field F_p for a prime 2 <= p < 2^31.
///
/// A PrimeField is a small value type; the raw-residue helpers below are the
/// hot path used by the sequence and matrix code, while FpElement is the
/// checked public surface.
class PrimeField {
 public:
  using residue = std::uint32_t;

  /// Throws Error{NotPrime} for composite or p < 2, Error{OutOfRange} for p >= 2^31.
  static PrimeField make(std::int64_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  /// Canonical residue of an arbitrary (possibly negative) integer.
  residue reduce(std::int64_t v) const noexcept {
    auto m = v % static_cast<std::int64_t>(p_);
    return static_cast<residue>(m < 0 ? m + p_ : m);
  }

  residue add(residue a, residue b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<residue>(s >= p_ ? s - p_ : s);
  }
  residue sub(residue a, residue b) const noexcept {
    return a >= b ? a - b : static_cast<residue>(std::uint64_t{a} + p_ - b);
  }
  residue neg(residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  residue mul(residue a, residue b) const noexcept {
    return static_cast<residue>((std::uint64_t{a} * b) % p_);
  }
  /// Extended Euclid. Throws Error{DivisionByZero} for a == 0.
  residue inv(residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  explicit PrimeField(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::int64_t n) noexcept;

/// An element of F_p, always held as its canonical representative in [0, p).
class FpElement {
 public:
  FpElement(PrimeField field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

  static FpElement zero(PrimeField f) { return {f, 0}; }
  static FpElement one(PrimeField f) { return {f, 1}; }

  PrimeField field() const noexcept { return field_; }
  std::uint32_t value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FpElement inverse() const;

  FpElement operator-() const { return raw(field_, field_.neg(value_)); }

  friend FpElement operator+(const FpElement& a, const FpElement& b) {
    return raw(a.field_, a.field_.add(a.value_, same_field(a, b).value_));
  }
  friend FpElement operator-(const FpElement& a, const FpElement& b) {
    return raw(a.field_, a.field_.sub(a.value_, same_field(a, b).value_));
  }
  friend FpElement operator*(const FpElement& a, const FpElement& b) {
    return raw(a.field_, a.field_.mul(a.value_, same_field(a, b).value_));
  }

  friend bool operator==(const FpElement&, const FpElement&) = default;

 private:
  static FpElement raw(PrimeField f, std::uint32_t v) {
    FpElement e{f, 0};
    e.value_ = v;
    return e;
  }
  static const FpElement& same_field(const FpElement& a, const FpElement& b);

  PrimeField field_;
  std::uint32_t value_;
};

inline std::ostream& operator<<(std::ostream& os, const FpElement& e) { return os << e.value(); }

}  // namespace foolset
