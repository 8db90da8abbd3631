#include "foolset/fooling.hpp"

#include <string>

namespace foolset {

Matrix matrix_from_sequence(const Lrs& seq, std::size_t n) {
  if (n == 0) throw Error(Errc::OutOfRange, "matrix size must be >= 1");
  const auto size = static_cast<std::int64_t>(n);
  // w[d + n - 1] = f(d) for d = k - l in [-(n-1), n-1].
  const auto w = seq.values(-(size - 1), 2 * n - 1);
  Matrix m(seq.field(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) m.set(k, l, w[k + n - 1 - l]);
  }
  return m;
}

FoolingWitness verify_fooling(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(Errc::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) {
        if (m(k, k) == 0) return {FoolingWitness::Kind::ZeroDiagonal, k, k};
      } else if (m(k, l) != 0 && m(l, k) != 0) {
        return {FoolingWitness::Kind::SymmetricPair, k, l};
      }
    }
  }
  return {};
}

RowRecurrenceReport check_row_recurrence(const Matrix& m, std::size_t r) {
  RowRecurrenceReport report;
  const PrimeField F = m.field();
  for (std::size_t k = r; k < m.rows(); ++k) {
    const auto row = m.row(k), a = m.row(k - r), b = m.row(k - r + 1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (row[j] != F.neg(F.add(a[j], b[j]))) {
        report.violating_rows.push_back(k);
        break;
      }
    }
  }
  if (r > m.rows() || r > m.cols()) {
    report.triangular_block = false;
    return report;
  }
  for (std::size_t i = 0; i < r && report.triangular_block; ++i) {
    if (m(i, i) == 0) report.triangular_block = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (m(i, j) != 0) report.triangular_block = false;
    }
  }
  return report;
}

bool is_circulant(const Matrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (m(k, l) != m(0, (l + n - k) % n)) return false;
    }
  }
  return true;
}

namespace {

// r = p^t + 1, or -1 when n = r(r - 1) + 1 would exceed the limit.
std::int64_t checked_order(std::int64_t p, std::int64_t t, std::size_t size_limit) {
  std::int64_t q = 1;
  const auto limit = static_cast<std::int64_t>(size_limit);
  for (std::int64_t i = 0; i < t; ++i) {
    q *= p;
    // n > q, so stop before q can overflow.
    if (q > limit) return -1;
  }
  const std::int64_t r = q + 1;
  return r * (r - 1) + 1 <= limit ? r : -1;
}

}  // namespace

FoolingBundle construct(std::int64_t p, std::int64_t t, std::size_t size_limit) {
  const PrimeField field = PrimeField::make(p);
  if (t < 1) throw Error(Errc::OutOfRange, "t must be >= 1, got " + std::to_string(t));
  const std::int64_t r = checked_order(p, t, size_limit);
  if (r < 0) {
    throw Error(Errc::SizeLimit, "p=" + std::to_string(p) + ", t=" + std::to_string(t) +
                                     " gives n above the limit " + std::to_string(size_limit));
  }
  const std::int64_t n = r * (r - 1) + 1;
  Lrs seq = construction_sequence(field, r);
  Matrix m = matrix_from_sequence(seq, static_cast<std::size_t>(n));
  const std::size_t rank = rank_mod_p(m);
  const bool fooling = verify_fooling(m).pass();
  return FoolingBundle{p, t, r, n, std::move(seq), std::move(m), rank, fooling};
}

std::vector<RatioRow> ratio_report(std::int64_t p, std::int64_t t_max, std::size_t size_limit) {
  std::vector<RatioRow> rows;
  std::int64_t q = 1;  // p^t
  for (std::int64_t t = 1; t <= t_max; ++t) {
    q *= p;
    const auto b = construct(p, t, size_limit);
    const auto rk = static_cast<std::int64_t>(b.rank);
    RatioRow row{p, t, b.r, b.n, b.rank, Fraction(b.n, rk * rk)};
    row.gap_identity = Fraction(1) - row.ratio == Fraction(b.r - 1, b.r * b.r);
    row.lower_bound = row.ratio >= Fraction(1) - Fraction(1, q);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace foolset
