#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "foolset/lrs.hpp"
#include "foolset/matrix.hpp"

namespace foolset {

inline constexpr std::size_t kDefaultSizeLimit = 5000;

using Fraction = boost::rational<std::int64_t>;

/// n x n matrix with entry (k, l) = f(k - l), indices 0-based.
Matrix matrix_from_sequence(const Lrs& seq, std::size_t n);

/// First violation of the fooling-set conditions, or pass.
struct FoolingWitness {
  enum class Kind { Pass, ZeroDiagonal, SymmetricPair };
  Kind kind = Kind::Pass;
  std::size_t k = 0;
  std::size_t l = 0;

  bool pass() const noexcept { return kind == Kind::Pass; }
  friend bool operator==(const FoolingWitness&, const FoolingWitness&) = default;
};

/// Row-major scan: a zero diagonal entry (k, k) or an off-diagonal pair with
/// M(k, l) and M(l, k) both nonzero, whichever comes first. Throws
/// Error{NotSquare}.
FoolingWitness verify_fooling(const Matrix& m);

/// Rows k >= r must satisfy row(k) = -row(k - r) - row(k - r + 1), and the
/// leading r x r block must be upper triangular with nonzero diagonal.
struct RowRecurrenceReport {
  std::vector<std::size_t> violating_rows;
  bool triangular_block = true;
  bool pass() const noexcept { return violating_rows.empty() && triangular_block; }
};
RowRecurrenceReport check_row_recurrence(const Matrix& m, std::size_t r);

/// True when m is square and m(k, l) depends only on (k - l) mod n.
bool is_circulant(const Matrix& m);

/// The (p, t) construction with r = p^t + 1 and n = r(r - 1) + 1.
struct FoolingBundle {
  std::int64_t p = 0;
  std::int64_t t = 0;
  std::int64_t r = 0;
  std::int64_t n = 0;
  Lrs seq;
  Matrix matrix;
  std::size_t rank = 0;
  bool fooling = false;
};

/// Throws Error{SizeLimit} when n exceeds `size_limit`, Error{OutOfRange} for t < 1.
FoolingBundle construct(std::int64_t p, std::int64_t t, std::size_t size_limit = kDefaultSizeLimit);

struct RatioRow {
  std::int64_t p = 0;
  std::int64_t t = 0;
  std::int64_t r = 0;
  std::int64_t n = 0;
  std::size_t rank = 0;
  Fraction ratio;           // n / rank^2
  bool gap_identity = false;  // 1 - ratio == (r - 1) / r^2
  bool lower_bound = false;   // ratio >= 1 - p^-t
};

std::vector<RatioRow> ratio_report(std::int64_t p, std::int64_t t_max,
                                   std::size_t size_limit = kDefaultSizeLimit);

}  // namespace foolset
