#include "foolset/lrs.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace foolset {

namespace {

// Per-direction memo size; indices beyond it are reached by rolling the state
// without storing it.
constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

}  // namespace

struct Lrs::Memo {
  std::mutex mutex;
  std::vector<std::uint32_t> forward;   // f(0), f(1), ...
  std::vector<std::uint32_t> backward;  // f(-1), f(-2), ...
  std::optional<std::int64_t> period;
};

namespace {

// f(m) from s = (f(m-r), ..., f(m-1)), s read through `at`.
template <class At>
std::uint32_t step_forward(const PrimeField& F, std::span<const std::uint32_t> c, At at) {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc = F.add(acc, F.mul(c[i], at(i)));
  return acc;
}

// f(k) from s = (f(k+1), ..., f(k+r)).
template <class At>
std::uint32_t step_backward(const PrimeField& F, std::span<const std::uint32_t> c,
                            std::uint32_t c0_inv, At at) {
  const std::size_t r = c.size();
  std::uint32_t acc = at(r - 1);
  for (std::size_t i = 1; i < r; ++i) acc = F.sub(acc, F.mul(c[i], at(i - 1)));
  return F.mul(c0_inv, acc);
}

}  // namespace

Lrs::Lrs(PrimeField field, std::vector<std::uint32_t> coeffs, std::vector<std::uint32_t> init)
    : field_(field),
      coeffs_(std::move(coeffs)),
      init_(std::move(init)),
      c0_inv_(field_.inv(coeffs_.front())),
      memo_(std::make_shared<Memo>()) {
  memo_->forward = init_;
}

Lrs Lrs::general(PrimeField field, std::span<const std::int64_t> coeffs,
                 std::span<const std::int64_t> init) {
  if (coeffs.empty() || coeffs.size() != init.size()) {
    throw Error(Errc::LengthMismatch, "recurrence needs r >= 1 coefficients and r initial values, got " +
                                          std::to_string(coeffs.size()) + " and " +
                                          std::to_string(init.size()));
  }
  std::vector<std::uint32_t> c, s;
  for (auto v : coeffs) c.push_back(field.reduce(v));
  for (auto v : init) s.push_back(field.reduce(v));
  if (c.front() == 0) {
    throw Error(Errc::Irreversible, "lowest coefficient c_0 must be nonzero");
  }
  return Lrs(field, std::move(c), std::move(s));
}

std::uint32_t Lrs::value(std::int64_t k) const {
  std::lock_guard lock(memo_->mutex);
  auto& fwd = memo_->forward;
  auto& bwd = memo_->backward;
  const std::size_t r = order();
  std::span<const std::uint32_t> c = coeffs_;

  if (k >= 0) {
    auto idx = static_cast<std::uint64_t>(k);
    if (idx < fwd.size()) return fwd[idx];
    if (idx < kMemoLimit) {
      while (fwd.size() <= idx) {
        std::size_t m = fwd.size();
        fwd.push_back(step_forward(field_, c, [&](std::size_t i) { return fwd[m - r + i]; }));
      }
      return fwd[idx];
    }
    // Roll from the memo edge.
    std::vector<std::uint32_t> ring(fwd.end() - static_cast<std::ptrdiff_t>(r), fwd.end());
    std::size_t head = 0;
    std::uint64_t m = fwd.size();  // index of the value about to be produced
    for (;; ++m) {
      auto next = step_forward(field_, c, [&](std::size_t i) { return ring[(head + i) % r]; });
      if (m == idx) return next;
      ring[head] = next;
      head = (head + 1) % r;
    }
  }

  auto j = static_cast<std::uint64_t>(-(k + 1));
  if (j < bwd.size()) return bwd[j];
  // get(i) for i < 0 reads bwd, otherwise fwd (which always holds f(0..r-1)).
  auto get = [&](std::int64_t i) {
    return i >= 0 ? fwd[static_cast<std::size_t>(i)] : bwd[static_cast<std::size_t>(-(i + 1))];
  };
  if (j < kMemoLimit) {
    while (bwd.size() <= j) {
      std::int64_t at = -static_cast<std::int64_t>(bwd.size()) - 1;
      bwd.push_back(step_backward(field_, c, c0_inv_, [&](std::size_t i) {
        return get(at + 1 + static_cast<std::int64_t>(i));
      }));
    }
    return bwd[j];
  }
  // ring holds (f(m+1), ..., f(m+r)) for the index m about to be produced.
  std::int64_t m = -static_cast<std::int64_t>(bwd.size()) - 1;
  std::vector<std::uint32_t> ring(r);
  for (std::size_t i = 0; i < r; ++i) ring[i] = get(m + 1 + static_cast<std::int64_t>(i));
  std::size_t head = 0;
  for (;; --m) {
    auto prev = step_backward(field_, c, c0_inv_, [&](std::size_t i) { return ring[(head + i) % r]; });
    if (m == k) return prev;
    // Drop f(m+r), prepend f(m).
    head = (head + r - 1) % r;
    ring[head] = prev;
  }
}

std::vector<std::uint32_t> Lrs::values(std::int64_t start, std::size_t len) const {
  std::vector<std::uint32_t> out;
  out.reserve(len);
  // Touch the extreme ends first so the memo grows in two calls.
  if (len > 0) {
    value(start);
    value(start + static_cast<std::int64_t>(len) - 1);
  }
  for (std::size_t i = 0; i < len; ++i) out.push_back(value(start + static_cast<std::int64_t>(i)));
  return out;
}

std::vector<FpElement> Lrs::window(std::int64_t start, std::size_t len) const {
  std::vector<FpElement> out;
  out.reserve(len);
  for (auto v : values(start, len)) out.emplace_back(field_, v);
  return out;
}

std::int64_t Lrs::period(std::int64_t cap) const {
  if (cap < 1) throw Error(Errc::OutOfRange, "period cap must be >= 1");
  {
    std::lock_guard lock(memo_->mutex);
    if (memo_->period && *memo_->period <= cap) return *memo_->period;
  }
  const std::size_t r = order();
  std::span<const std::uint32_t> c = coeffs_;
  std::vector<std::uint32_t> ring = init_;  // state(m), f(m + i) at ring[(head + i) % r]
  std::size_t head = 0;
  for (std::int64_t m = 1; m <= cap; ++m) {
    auto next = step_forward(field_, c, [&](std::size_t i) { return ring[(head + i) % r]; });
    ring[head] = next;
    head = (head + 1) % r;
    bool same = true;
    for (std::size_t i = 0; i < r && same; ++i) same = ring[(head + i) % r] == init_[i];
    if (same) {
      std::lock_guard lock(memo_->mutex);
      memo_->period = m;
      return m;
    }
  }
  throw Error(Errc::CapExceeded, "state did not recur within " + std::to_string(cap) + " steps");
}

std::optional<std::int64_t> Lrs::cached_period() const {
  std::lock_guard lock(memo_->mutex);
  return memo_->period;
}

Lrs Lrs::rebased(std::int64_t offset) const {
  return Lrs(field_, coeffs_, values(offset, order()));
}

Lrs construction_sequence(PrimeField field, std::int64_t r) {
  if (r < 2) throw Error(Errc::InvalidOrder, "order r = " + std::to_string(r) + " is below 2");
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(r), 0);
  std::vector<std::int64_t> init(static_cast<std::size_t>(r), 0);
  coeffs[0] = -1;
  coeffs[1] = -1;
  init[0] = 1;
  return Lrs::general(field, coeffs, init);
}

Lrs construction_sequence(std::int64_t p, std::int64_t r) {
  if (r < 2) throw Error(Errc::InvalidOrder, "order r = " + std::to_string(r) + " is below 2");
  return construction_sequence(PrimeField::make(p), r);
}

ZeroBlockReport check_zero_blocks(const Lrs& seq, std::int64_t r) {
  ZeroBlockReport report;
  for (std::int64_t j = 0; j <= r - 2; ++j) {
    for (std::int64_t i = 1; i <= r - 1 - j; ++i) {
      ++report.checked;
      if (seq.value(j * r + i) != 0) report.violations.emplace_back(j, i);
    }
  }
  return report;
}

CrossSymmetryReport check_cross_symmetry(const Lrs& seq, std::int64_t n) {
  CrossSymmetryReport report;
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    if (seq.value(k) != 0 && seq.value(-k) != 0) report.violations.push_back(k);
  }
  return report;
}

std::vector<std::int64_t> period_violations(const Lrs& seq, std::int64_t n, std::int64_t lo,
                                            std::int64_t hi) {
  std::vector<std::int64_t> bad;
  for (std::int64_t k = lo; k <= hi; ++k) {
    if (seq.value(k + n) != seq.value(k)) bad.push_back(k);
  }
  return bad;
}

}  // namespace foolset
