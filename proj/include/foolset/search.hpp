#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "foolset/matrix.hpp"

namespace foolset {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr std::size_t kBruteForceCellCap = 24;

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Zero-nonzero pattern of a host matrix.
class PatternMatrix {
 public:
  PatternMatrix(std::size_t rows, std::size_t cols);

  static PatternMatrix from_matrix(const Matrix& m);
  static PatternMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool operator()(std::size_t i, std::size_t j) const noexcept { return support_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { support_[i * cols_ + j] = v ? 1 : 0; }

  std::size_t support_size() const noexcept;
  /// Support cells in row-major order.
  std::vector<Cell> support_cells() const;

  PatternMatrix without_row(std::size_t i) const;
  PatternMatrix without_col(std::size_t j) const;

  friend bool operator==(const PatternMatrix&, const PatternMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> support_;
};

/// (i, j) ~ (k, l) iff i != k, j != l, and not both (i, l) and (k, j) are in
/// the support. Both cells are assumed to be support cells.
inline bool compatible(const PatternMatrix& a, Cell x, Cell y) noexcept {
  return x.row != y.row && x.col != y.col && !(a(x.row, y.col) && a(y.row, x.col));
}

/// Explicit graph on the support cells; its cliques are exactly the
/// fooling-set submatrices of the pattern.
struct CompatibilityGraph {
  std::vector<Cell> vertices;
  std::vector<std::vector<std::size_t>> neighbours;  // sorted

  std::size_t edge_count() const noexcept;
  bool adjacent(std::size_t u, std::size_t v) const;
};

CompatibilityGraph compatibility_graph(const PatternMatrix& a);

struct SearchResult {
  std::vector<Cell> cells;  // sorted
  std::size_t size = 0;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
};

/// Maximum fooling-set submatrix by branch and bound over the compatibility
/// graph. Among maximum solutions the lexicographically smallest sorted cell
/// list is returned. When the node budget runs out the best clique found so
/// far is returned with optimal = false.
SearchResult max_fooling_submatrix(const PatternMatrix& a, std::uint64_t budget = kDefaultNodeBudget);

/// Decision form: true/false when settled, nullopt when the budget ran out
/// before a fooling-set submatrix of `size` was found.
std::optional<bool> has_fooling_submatrix(const PatternMatrix& a, std::size_t size,
                                          std::uint64_t budget = kDefaultNodeBudget);

/// Exhaustive oracle over subsets of the support. Throws Error{TooLarge} when
/// the support has more than kBruteForceCellCap cells.
SearchResult brute_force_fooling(const PatternMatrix& a);

/// Whether the cells, read as edges of the bipartite graph with biadjacency
/// given by the pattern, form a cross-free matching. Throws
/// Error{CellOutsideSupport}.
bool cross_free_check(const PatternMatrix& a, std::span<const Cell> cells);

/// Whether rows/cols of the cells select a fooling-set submatrix, with
/// (row_i, col_i) placed on the diagonal.
bool is_fooling_selection(const PatternMatrix& a, std::span<const Cell> cells);

}  // namespace foolset
