#include "foolset/search.hpp"

#include <algorithm>
#include <string>

#include "foolset/fooling.hpp"

namespace foolset {

PatternMatrix::PatternMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), support_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw Error(Errc::OutOfRange, "pattern dimensions must be positive");
}

PatternMatrix PatternMatrix::from_matrix(const Matrix& m) {
  PatternMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a.set(i, j, m(i, j) != 0);
  }
  return a;
}

PatternMatrix PatternMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw Error(Errc::OutOfRange, "empty pattern");
  PatternMatrix a(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != a.cols_) throw Error(Errc::LengthMismatch, "ragged pattern rows");
    for (std::size_t j = 0; j < a.cols_; ++j) a.set(i, j, rows[i][j] != 0);
  }
  return a;
}

std::size_t PatternMatrix::support_size() const noexcept {
  return static_cast<std::size_t>(std::count(support_.begin(), support_.end(), std::uint8_t{1}));
}

std::vector<Cell> PatternMatrix::support_cells() const {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j)) cells.push_back({i, j});
    }
  }
  return cells;
}

PatternMatrix PatternMatrix::without_row(std::size_t r) const {
  PatternMatrix a(rows_ - 1, cols_);
  for (std::size_t i = 0, k = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) a.set(k, j, (*this)(i, j));
    ++k;
  }
  return a;
}

PatternMatrix PatternMatrix::without_col(std::size_t c) const {
  PatternMatrix a(rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0, k = 0; j < cols_; ++j) {
      if (j == c) continue;
      a.set(i, k++, (*this)(i, j));
    }
  }
  return a;
}

std::size_t CompatibilityGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& n : neighbours) twice += n.size();
  return twice / 2;
}

bool CompatibilityGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& n = neighbours.at(u);
  return std::binary_search(n.begin(), n.end(), v);
}

CompatibilityGraph compatibility_graph(const PatternMatrix& a) {
  CompatibilityGraph g;
  g.vertices = a.support_cells();
  g.neighbours.resize(g.vertices.size());
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      if (compatible(a, g.vertices[u], g.vertices[v])) {
        g.neighbours[u].push_back(v);
        g.neighbours[v].push_back(u);
      }
    }
  }
  for (auto& n : g.neighbours) std::sort(n.begin(), n.end());
  return g;
}

namespace {

// Greedy colouring is quadratic in the candidate count; above this size only
// the distinct-row/column bound is used.
constexpr std::size_t kColouringLimit = 1024;

// Branch and bound over support cells in row-major order. Candidates are
// expanded in increasing order, so cliques are visited in lexicographic order
// of their sorted cell lists and the first clique of a new record size is the
// lexicographically smallest of that size. Pruning requires a strict
// improvement, which keeps that property.
class CliqueSearch {
 public:
  CliqueSearch(const PatternMatrix& a, std::uint64_t budget)
      : a_(a), cells_(a.support_cells()), budget_(budget), col_stamp_(a.cols(), 0) {
    std::vector<bool> row_seen(a.rows()), col_seen(a.cols());
    std::size_t rows = 0, cols = 0;
    for (auto c : cells_) {
      if (!row_seen[c.row]) row_seen[c.row] = true, ++rows;
      if (!col_seen[c.col]) col_seen[c.col] = true, ++cols;
    }
    ceiling_ = std::min(rows, cols);
  }

  SearchResult run() {
    std::vector<std::uint32_t> all(cells_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
    expand(all);

    SearchResult result;
    for (auto v : best_) result.cells.push_back(cells_[v]);
    result.size = result.cells.size();
    result.optimal = !aborted_;
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  bool compat(std::uint32_t u, std::uint32_t v) const { return compatible(a_, cells_[u], cells_[v]); }

  // bound[i] >= clique number of the candidates P[i..].
  std::vector<std::size_t> suffix_bounds(const std::vector<std::uint32_t>& P) {
    const std::size_t m = P.size();
    std::vector<std::size_t> bound(m);
    ++generation_;
    std::size_t rows = 0, cols = 0;
    for (std::size_t i = m; i-- > 0;) {
      const Cell c = cells_[P[i]];
      if (i + 1 == m || cells_[P[i + 1]].row != c.row) ++rows;  // P is row-major sorted
      if (col_stamp_[c.col] != generation_) col_stamp_[c.col] = generation_, ++cols;
      bound[i] = std::min(rows, cols);
    }
    if (m <= kColouringLimit) {
      std::vector<std::vector<std::uint32_t>> classes;
      for (std::size_t i = m; i-- > 0;) {
        const auto v = P[i];
        auto fits = [&](const std::vector<std::uint32_t>& cls) {
          return std::none_of(cls.begin(), cls.end(), [&](auto u) { return compat(u, v); });
        };
        auto it = std::find_if(classes.begin(), classes.end(), fits);
        if (it == classes.end()) {
          classes.emplace_back(1, v);
        } else {
          it->push_back(v);
        }
        bound[i] = std::min(bound[i], classes.size());
      }
    }
    return bound;
  }

  void expand(const std::vector<std::uint32_t>& P) {
    if (nodes_ == budget_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (best_.size() == ceiling_) {
        done_ = true;
        return;
      }
    }
    if (P.empty()) return;

    const auto bound = suffix_bounds(P);
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (current_.size() + bound[i] <= best_.size()) break;
      const auto v = P[i];
      next.clear();
      for (std::size_t j = i + 1; j < P.size(); ++j) {
        if (compat(v, P[j])) next.push_back(P[j]);
      }
      current_.push_back(v);
      expand(next);
      current_.pop_back();
      if (done_ || aborted_) return;
    }
  }

  const PatternMatrix& a_;
  std::vector<Cell> cells_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t ceiling_ = 0;
  bool aborted_ = false;
  bool done_ = false;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  std::vector<std::uint64_t> col_stamp_;
  std::uint64_t generation_ = 0;
};

void require_support(const PatternMatrix& a, std::span<const Cell> cells) {
  for (auto c : cells) {
    if (c.row >= a.rows() || c.col >= a.cols() || !a(c.row, c.col)) {
      throw Error(Errc::CellOutsideSupport,
                  "cell (" + std::to_string(c.row) + ", " + std::to_string(c.col) + ")");
    }
  }
}

}  // namespace

SearchResult max_fooling_submatrix(const PatternMatrix& a, std::uint64_t budget) {
  if (budget < 1) throw Error(Errc::OutOfRange, "node budget must be >= 1");
  return CliqueSearch(a, budget).run();
}

std::optional<bool> has_fooling_submatrix(const PatternMatrix& a, std::size_t size,
                                          std::uint64_t budget) {
  const auto result = max_fooling_submatrix(a, budget);
  if (result.size >= size) return true;
  if (result.optimal) return false;
  return std::nullopt;
}

SearchResult brute_force_fooling(const PatternMatrix& a) {
  const auto cells = a.support_cells();
  if (cells.size() > kBruteForceCellCap) {
    throw Error(Errc::TooLarge, std::to_string(cells.size()) + " support cells exceed the cap of " +
                                    std::to_string(kBruteForceCellCap));
  }
  // Include/exclude enumeration in lexicographic order. A subset that breaks
  // the fooling conditions cannot be completed to one that satisfies them,
  // so such branches are cut.
  SearchResult result;
  result.optimal = true;
  std::vector<Cell> chosen;
  auto extendable = [&](Cell c) {
    for (auto d : chosen) {
      if (d.row == c.row || d.col == c.col) return false;
      if (a(d.row, c.col) && a(c.row, d.col)) return false;
    }
    return true;
  };
  auto walk = [&](auto&& self, std::size_t from) -> void {
    ++result.nodes_explored;
    if (chosen.size() > result.cells.size()) result.cells = chosen;
    for (std::size_t i = from; i < cells.size(); ++i) {
      if (!extendable(cells[i])) continue;
      chosen.push_back(cells[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  walk(walk, 0);
  result.size = result.cells.size();
  return result;
}

bool cross_free_check(const PatternMatrix& a, std::span<const Cell> cells) {
  require_support(a, cells);
  for (std::size_t x = 0; x < cells.size(); ++x) {
    for (std::size_t y = x + 1; y < cells.size(); ++y) {
      const Cell e = cells[x], f = cells[y];
      if (e.row == f.row || e.col == f.col) return false;  // not a matching
      if (a(e.row, f.col) && a(f.row, e.col)) return false;  // e, f span a C4
    }
  }
  return true;
}

bool is_fooling_selection(const PatternMatrix& a, std::span<const Cell> cells) {
  if (cells.empty()) return true;
  std::vector<bool> rows(a.rows()), cols(a.cols());
  for (auto c : cells) {
    if (c.row >= a.rows() || c.col >= a.cols() || rows[c.row] || cols[c.col]) return false;
    rows[c.row] = cols[c.col] = true;
  }
  const PrimeField f2 = PrimeField::make(2);
  Matrix sub(f2, cells.size(), cells.size());
  for (std::size_t x = 0; x < cells.size(); ++x) {
    for (std::size_t y = 0; y < cells.size(); ++y) sub.set(x, y, a(cells[x].row, cells[y].col) ? 1 : 0);
  }
  return verify_fooling(sub).pass();
}

}  // namespace foolset
