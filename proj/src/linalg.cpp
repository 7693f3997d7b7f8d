#include "laddermat/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "laddermat/error.hpp"
#include "laddermat/subspace.hpp"

namespace laddermat {

RrefResult rref(Mat m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      auto a = m.row(pivot);
      auto b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const FieldScalar scale = m(lead, c).inverse();
    if (!scale.is_one()) {
      for (std::size_t k = c; k < cols; ++k) m(lead, k) *= scale;
    }
    auto lead_row = m.row(lead);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const FieldScalar factor = -m(r, c);
      auto target = m.row(r);
      for (std::size_t k = c; k < cols; ++k) {
        if (!lead_row[k].is_zero()) target[k] += factor * lead_row[k];
      }
    }
    out.pivot_columns.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Subspace kernel(const Mat& m) {
  const Field field = m.field();
  const std::size_t cols = m.cols();
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : red.pivot_columns) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vector(field, cols);
    v[free] = field.one();
    for (std::size_t r = 0; r < red.rank; ++r) {
      const FieldScalar& x = red.matrix(r, free);
      if (!x.is_zero()) v[red.pivot_columns[r]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(field, cols, basis);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  const Field field = m.field();
  const std::size_t cols = m.cols();
  Mat aug(field, m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = b[r];
  }
  RrefResult red = rref(std::move(aug));
  Vec x = zero_vector(field, cols);
  for (std::size_t r = 0; r < red.rank; ++r) {
    const std::size_t p = red.pivot_columns[r];
    if (p == cols) return std::nullopt;
    x[p] = red.matrix(r, cols);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Field field = m.field();
  Mat aug(field, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = field.one();
  }
  RrefResult red = rref(std::move(aug));
  if (red.rank < n || red.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Mat inv(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
  return inv;
}

SparseSystem::SparseSystem(Field field, std::size_t unknowns) : field_(field), unknowns_(unknowns) {}

void SparseSystem::add_row(std::vector<Entry> row) {
  std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  for (auto& [col, coeff] : row) {
    if (col >= unknowns_) throw DimensionMismatch("sparse row references a column out of range");
    if (!merged.empty() && merged.back().first == col) {
      merged.back().second += coeff;
    } else {
      merged.emplace_back(col, std::move(coeff));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
  if (!merged.empty()) rows_.push_back(std::move(merged));
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

Subspace SparseSystem::kernel() const {
  DisjointSets sets(unknowns_);
  std::vector<bool> constrained(unknowns_, false);
  for (const auto& row : rows_) {
    for (const auto& [col, coeff] : row) {
      constrained[col] = true;
      sets.unite(row.front().first, col);
    }
  }

  // Component root -> (columns, rows).
  std::vector<std::vector<std::size_t>> comp_cols(unknowns_);
  std::vector<std::vector<std::size_t>> comp_rows(unknowns_);
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (constrained[c]) comp_cols[sets.find(c)].push_back(c);
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) comp_rows[sets.find(rows_[r].front().first)].push_back(r);

  std::vector<Vec> basis;
  std::vector<std::size_t> local(unknowns_, 0);
  for (std::size_t root = 0; root < unknowns_; ++root) {
    const auto& cols = comp_cols[root];
    if (cols.empty()) continue;
    for (std::size_t k = 0; k < cols.size(); ++k) local[cols[k]] = k;
    Mat block(field_, comp_rows[root].size(), cols.size());
    for (std::size_t i = 0; i < comp_rows[root].size(); ++i) {
      for (const auto& [col, coeff] : rows_[comp_rows[root][i]]) block(i, local[col]) = coeff;
    }
    Subspace local_kernel = laddermat::kernel(block);
    for (std::size_t k = 0; k < local_kernel.dim(); ++k) {
      Vec v = zero_vector(field_, unknowns_);
      auto src = local_kernel.basis().row(k);
      for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = src[j];
      basis.push_back(std::move(v));
    }
  }
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (constrained[c]) continue;
    Vec v = zero_vector(field_, unknowns_);
    v[c] = field_.one();
    basis.push_back(std::move(v));
  }
  return Subspace::span(field_, unknowns_, basis);
}

}  // namespace laddermat

namespace laddermat {

LinearSolver::LinearSolver(Mat a) : a_(std::move(a)) {
  const Field f = a_.field();
  rows_ = rref(a_.transpose()).pivot_columns;
  const std::size_t r = rows_.size();
  const std::size_t cols = a_.cols();
  Mat aug(f, r, cols + r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < cols; ++c) aug(i, c) = a_(rows_[i], c);
    aug(i, cols + i) = f.one();
  }
  RrefResult red = rref(std::move(aug));
  pivots_ = red.pivot_columns;
  transform_ = Mat(f, r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < r; ++c) transform_(i, c) = red.matrix(i, cols + c);
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
  if (b.size() != a_.rows()) throw DimensionMismatch("right-hand side length differs from row count");
  const Field f = a_.field();
  Vec x = zero_vector(f, a_.cols());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    FieldScalar s = f.zero();
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (!transform_(i, k).is_zero() && !b[rows_[k]].is_zero()) s += transform_(i, k) * b[rows_[k]];
    x[pivots_[i]] = s;
  }
  if (a_ * x != b) return std::nullopt;
  return x;
}

}  // namespace laddermat
