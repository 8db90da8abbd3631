#include "foolset/matrix.hpp"

#include <string>
#include <utility>

namespace foolset {

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw Error(Errc::OutOfRange, "matrix dimensions must be positive");
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(Errc::OutOfRange, "empty matrix");
  Matrix m(field, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw Error(Errc::LengthMismatch, "row " + std::to_string(i) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(m.cols_));
    }
    for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::reduced(PrimeField target) const {
  Matrix m(target, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = target.reduce(data_[k]);
  return m;
}

Matrix Matrix::permuted(std::span<const std::size_t> row_perm,
                        std::span<const std::size_t> col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols_) {
    throw Error(Errc::LengthMismatch, "permutation length does not match matrix shape");
  }
  Matrix m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.data_[i * cols_ + j] = (*this)(row_perm[i], col_perm[j]);
  }
  return m;
}

std::size_t rank_mod_p(const Matrix& m) {
  const PrimeField F = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint32_t> a(m.data().begin(), m.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return a[i * cols + j]; };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::uint32_t inv = F.inv(at(rank, c));
    for (std::size_t j = c; j < cols; ++j) at(rank, j) = F.mul(at(rank, j), inv);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint32_t factor = at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) at(i, j) = F.sub(at(i, j), F.mul(factor, at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace foolset
