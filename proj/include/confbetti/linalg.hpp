#pragma once

// Exact sparse linear algebra over Q.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace confbetti {

/// Sparse rows x cols matrix over Q. Entries are kept canonical: at most one
/// per position, never zero.
class SparseRationalMatrix {
 public:
  using Position = std::pair<std::size_t, std::size_t>;

  SparseRationalMatrix() = default;
  SparseRationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static SparseRationalMatrix identity(std::size_t n) {
    SparseRationalMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.add(j, j, 1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::map<Position, Rational>& entries() const { return entries_; }

  /// Accumulates `v` into (r, c).
  void add(std::size_t r, std::size_t c, const Rational& v) {
    if (r >= rows_ || c >= cols_) {
      throw std::out_of_range("entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside " +
                              std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }

  Rational at(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  SparseRationalMatrix transpose() const {
    SparseRationalMatrix t(cols_, rows_);
    for (const auto& [pos, v] : entries_) t.entries_.emplace(Position{pos.second, pos.first}, v);
    return t;
  }

  SparseRationalMatrix scaled(const Rational& c) const {
    SparseRationalMatrix m(rows_, cols_);
    if (c == 0) return m;
    for (const auto& [pos, v] : entries_) m.entries_.emplace(pos, v * c);
    return m;
  }

  friend SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("dimension mismatch in product: " + std::to_string(a.rows_) + "x" +
                                  std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                  std::to_string(b.cols_));
    }
    std::vector<std::vector<std::pair<std::size_t, Rational>>> b_rows(b.rows_);
    for (const auto& [pos, v] : b.entries_) b_rows[pos.first].emplace_back(pos.second, v);
    SparseRationalMatrix p(a.rows_, b.cols_);
    for (const auto& [pos, v] : a.entries_) {
      for (const auto& [c, w] : b_rows[pos.second]) p.add(pos.first, c, v * w);
    }
    return p;
  }

  friend SparseRationalMatrix operator+(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("dimension mismatch in sum");
    SparseRationalMatrix s = a;
    for (const auto& [pos, v] : b.entries_) s.add(pos.first, pos.second, v);
    return s;
  }

  friend SparseRationalMatrix operator-(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
    return a + b.scaled(-1);
  }

  friend bool operator==(const SparseRationalMatrix&, const SparseRationalMatrix&) = default;

  /// Copies `block` into this matrix with its (0,0) at (row0, col0).
  void place(const SparseRationalMatrix& block, std::size_t row0, std::size_t col0) {
    if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_) throw std::out_of_range("block does not fit");
    for (const auto& [pos, v] : block.entries_) add(row0 + pos.first, col0 + pos.second, v);
  }

  /// Permutes rows and columns: entry (r, c) moves to (row_perm[r], col_perm[c]).
  SparseRationalMatrix permuted(const std::vector<std::size_t>& row_perm, const std::vector<std::size_t>& col_perm) const {
    if (row_perm.size() != rows_ || col_perm.size() != cols_) throw std::invalid_argument("permutation size mismatch");
    SparseRationalMatrix m(rows_, cols_);
    for (const auto& [pos, v] : entries_) m.entries_.emplace(Position{row_perm[pos.first], col_perm[pos.second]}, v);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Position, Rational> entries_;
};

/// Assembles a block matrix; `blocks[r][c]` may be default-constructed
/// (0x0) to mean a zero block, provided its row and column sizes are fixed
/// by other blocks or by `row_sizes` / `col_sizes`.
inline SparseRationalMatrix block_matrix(const std::vector<std::vector<SparseRationalMatrix>>& blocks,
                                         const std::vector<std::size_t>& row_sizes,
                                         const std::vector<std::size_t>& col_sizes) {
  if (blocks.size() != row_sizes.size()) throw std::invalid_argument("block row count mismatch");
  const std::size_t total_rows = std::accumulate(row_sizes.begin(), row_sizes.end(), std::size_t{0});
  const std::size_t total_cols = std::accumulate(col_sizes.begin(), col_sizes.end(), std::size_t{0});
  SparseRationalMatrix m(total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t br = 0; br < blocks.size(); ++br) {
    if (blocks[br].size() != col_sizes.size()) throw std::invalid_argument("block column count mismatch");
    std::size_t c0 = 0;
    for (std::size_t bc = 0; bc < col_sizes.size(); ++bc) {
      const auto& b = blocks[br][bc];
      if (!b.is_zero()) {
        if (b.rows() != row_sizes[br] || b.cols() != col_sizes[bc]) {
          throw std::invalid_argument("block (" + std::to_string(br) + "," + std::to_string(bc) + ") has wrong shape");
        }
        m.place(b, r0, c0);
      }
      c0 += col_sizes[bc];
    }
    r0 += row_sizes[br];
  }
  return m;
}

namespace detail {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;  // sorted by column

inline void normalize_content(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

// row <- a*row - b*pivot, where a and b make the leading entries cancel.
inline IntRow eliminate(const IntRow& row, const IntRow& pivot) {
  Integer g = gcd(row.front().second, pivot.front().second);
  const Integer a = pivot.front().second / g;
  const Integer b = row.front().second / g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t x = 1, y = 1;  // leading entries cancel
  while (x < row.size() || y < pivot.size()) {
    if (y == pivot.size() || (x < row.size() && row[x].first < pivot[y].first)) {
      out.emplace_back(row[x].first, a * row[x].second);
      ++x;
    } else if (x == row.size() || pivot[y].first < row[x].first) {
      out.emplace_back(pivot[y].first, -b * pivot[y].second);
      ++y;
    } else {
      Integer v = a * row[x].second - b * pivot[y].second;
      if (v != 0) out.emplace_back(row[x].first, std::move(v));
      ++x;
      ++y;
    }
  }
  normalize_content(out);
  return out;
}

// Echelon rank of rows that share one connected component.
inline std::size_t component_rank(std::vector<IntRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const IntRow& l, const IntRow& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l.front().first < r.front().first;
  });
  std::map<std::size_t, IntRow> pivots;  // keyed by leading column
  for (auto& row : rows) {
    IntRow cur = std::move(row);
    while (!cur.empty()) {
      auto it = pivots.find(cur.front().first);
      if (it == pivots.end()) {
        pivots.emplace(cur.front().first, std::move(cur));
        break;
      }
      cur = eliminate(cur, it->second);
    }
  }
  return pivots.size();
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Exact rank over Q.
///
/// Rows are scaled to primitive integer vectors, the matrix is split into the
/// connected components of its row/column incidence graph, and each component
/// is brought to echelon form by fraction-free elimination (rows kept
/// primitive after every step). Sparsest rows are placed first.
inline std::size_t rank(const SparseRationalMatrix& m) {
  if (m.is_zero()) return 0;
  std::vector<detail::IntRow> rows(m.rows());
  std::vector<Integer> lcm_den(m.rows(), Integer(1));
  for (const auto& [pos, v] : m.entries()) {
    mpz_lcm(lcm_den[pos.first].get_mpz_t(), lcm_den[pos.first].get_mpz_t(), v.get_den_mpz_t());
  }
  for (const auto& [pos, v] : m.entries()) {  // map order: by row, then column
    Integer scaled = v.get_num() * (lcm_den[pos.first] / v.get_den());
    rows[pos.first].emplace_back(pos.second, std::move(scaled));
  }

  detail::DisjointSets sets(m.cols());
  for (const auto& row : rows) {
    for (std::size_t j = 1; j < row.size(); ++j) sets.unite(row[0].first, row[j].first);
  }
  std::map<std::size_t, std::vector<detail::IntRow>> components;
  for (auto& row : rows) {
    if (row.empty()) continue;
    detail::normalize_content(row);
    components[sets.find(row.front().first)].push_back(std::move(row));
  }
  std::size_t total = 0;
  for (auto& [root, comp] : components) total += detail::component_rank(std::move(comp));
  return total;
}

/// Dimension of the homology at a block, given the outgoing differential
/// (block -> lower degree) and the incoming one (higher degree -> block).
/// Verifies that the two compose to zero.
inline std::size_t homology_dim(const SparseRationalMatrix& d_out, const SparseRationalMatrix& d_in) {
  if (d_in.rows() != d_out.cols()) {
    throw std::invalid_argument("dimension mismatch: incoming map has " + std::to_string(d_in.rows()) +
                                " rows but block has dimension " + std::to_string(d_out.cols()));
  }
  if (!(d_out * d_in).is_zero()) throw std::logic_error("not a complex: d_out * d_in != 0");
  return d_out.cols() - rank(d_out) - rank(d_in);
}

/// Dimension of the joint kernel of maps sharing a domain.
inline std::size_t joint_nullity(const std::vector<SparseRationalMatrix>& maps, std::size_t domain_dim) {
  std::vector<std::vector<SparseRationalMatrix>> stacked;
  std::vector<std::size_t> row_sizes;
  for (const auto& m : maps) {
    if (m.cols() != domain_dim) throw std::invalid_argument("maps do not share the domain");
    stacked.push_back({m});
    row_sizes.push_back(m.rows());
  }
  if (stacked.empty()) return domain_dim;
  return domain_dim - rank(block_matrix(stacked, row_sizes, {domain_dim}));
}

}  // namespace confbetti
