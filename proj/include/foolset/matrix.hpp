#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "foolset/field.hpp"

namespace foolset {

/// Dense row-major matrix of canonical residues modulo p.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  static Matrix identity(PrimeField field, std::size_t n);
  /// Entries are reduced modulo p; every row must have the same length.
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);

  PrimeField field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  FpElement element(std::size_t i, std::size_t j) const { return {field_, (*this)(i, j)}; }
  void set(std::size_t i, std::size_t j, std::int64_t v) { data_[i * cols_ + j] = field_.reduce(v); }

  std::span<const std::uint32_t> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const std::uint32_t> data() const noexcept { return data_; }

  /// Same shape and entries, residues reinterpreted modulo another prime.
  Matrix reduced(PrimeField target) const;
  Matrix permuted(std::span<const std::size_t> row_perm, std::span<const std::size_t> col_perm) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// Exact rank over F_p by Gaussian elimination on a copy; pivots are the
/// first nonzero entry in each column.
std::size_t rank_mod_p(const Matrix& m);

}  // namespace foolset
