#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "foolset/field.hpp"

namespace foolset {

inline constexpr std::int64_t kDefaultPeriodCap = 10'000'000;

/// A reversible linear recurring sequence f: Z -> F_p of order r,
///
///     f(k + r) = c_0 f(k) + c_1 f(k + 1) + ... + c_{r-1} f(k + r - 1),
///
/// with c_0 != 0 so that the recurrence can also be run backwards. Values are
/// computed on demand and memoized in a window around 0 that grows in both
/// directions. The memo is shared between copies and guarded by a mutex; it
/// never changes observable results.
class Lrs {
 public:
  /// Throws Error{LengthMismatch} when the lists differ in length or are
  /// empty, Error{Irreversible} when c_0 reduces to zero.
  static Lrs general(PrimeField field, std::span<const std::int64_t> coeffs,
                     std::span<const std::int64_t> init);

  PrimeField field() const noexcept { return field_; }
  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const std::uint32_t> coefficients() const noexcept { return coeffs_; }
  std::span<const std::uint32_t> initial_values() const noexcept { return init_; }

  FpElement eval(std::int64_t k) const { return {field_, value(k)}; }
  FpElement operator()(std::int64_t k) const { return eval(k); }
  std::uint32_t value(std::int64_t k) const;

  /// [f(start), ..., f(start + len - 1)].
  std::vector<FpElement> window(std::int64_t start, std::size_t len) const;
  std::vector<std::uint32_t> values(std::int64_t start, std::size_t len) const;

  /// Minimal n >= 1 with state(n) == state(0), state(k) = (f(k), ..., f(k+r-1)).
  /// Throws Error{CapExceeded} if the state does not recur within `cap` steps.
  std::int64_t period(std::int64_t cap = kDefaultPeriodCap) const;
  std::optional<std::int64_t> cached_period() const;

  /// The same recurrence started from state(offset): g(k) = f(k + offset).
  Lrs rebased(std::int64_t offset) const;

 private:
  struct Memo;

  Lrs(PrimeField field, std::vector<std::uint32_t> coeffs, std::vector<std::uint32_t> init);

  PrimeField field_;
  std::vector<std::uint32_t> coeffs_;
  std::vector<std::uint32_t> init_;
  std::uint32_t c0_inv_;
  std::shared_ptr<Memo> memo_;
};

/// The construction sequence: f(k + r) = -f(k) - f(k + 1), f(0) = 1,
/// f(1) = ... = f(r - 1) = 0. Throws Error{InvalidOrder} for r < 2 and
/// propagates the field errors for p.
Lrs construction_sequence(std::int64_t p, std::int64_t r);
Lrs construction_sequence(PrimeField field, std::int64_t r);

/// Zero blocks: f(j r + i) == 0 for j = 0..r-2, i = 1..r-1-j.
struct ZeroBlockReport {
  std::size_t checked = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> violations;  // (j, i)
  bool pass() const noexcept { return violations.empty(); }
};
ZeroBlockReport check_zero_blocks(const Lrs& seq, std::int64_t r);

/// f(k) f(-k) == 0 for k = 1..n-1.
struct CrossSymmetryReport {
  std::vector<std::int64_t> violations;
  bool pass() const noexcept { return violations.empty(); }
};
CrossSymmetryReport check_cross_symmetry(const Lrs& seq, std::int64_t n);

/// Indices k in [lo, hi] with f(k + n) != f(k). Empty means n is a period on
/// that range.
std::vector<std::int64_t> period_violations(const Lrs& seq, std::int64_t n, std::int64_t lo,
                                            std::int64_t hi);

}  // namespace foolset
