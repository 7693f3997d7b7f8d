#include "laddermat/subspace.hpp"

#include "laddermat/error.hpp"
#include "laddermat/linalg.hpp"

namespace laddermat {

Subspace::Subspace(std::size_t ambient_dim, Mat canonical, std::vector<std::size_t> pivots)
    : ambient_dim_(ambient_dim), basis_(std::move(canonical)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
  return Subspace(ambient_dim, Mat(field, 0, ambient_dim), {});
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) pivots[k] = k;
  return Subspace(ambient_dim, Mat::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, std::span<const Vec> vectors) {
  if (vectors.empty()) return zero(field, ambient_dim);
  return row_space(Mat::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Mat& m) {
  RrefResult red = rref(m);
  Mat canonical(m.field(), red.rank, m.cols());
  for (std::size_t r = 0; r < red.rank; ++r) {
    auto src = red.matrix.row(r);
    std::copy(src.begin(), src.end(), canonical.row(r).begin());
  }
  return Subspace(m.cols(), std::move(canonical), std::move(red.pivot_columns));
}

void Subspace::require_compatible(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) {
    throw DimensionMismatch("ambient dimensions " + std::to_string(ambient_dim_) + " and " +
                            std::to_string(other.ambient_dim_));
  }
  if (field() != other.field()) throw FieldMismatch("subspaces over different fields");
}

Vec Subspace::reduce(std::span<const FieldScalar> v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector length differs from ambient dimension");
  Vec w(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const FieldScalar x = w[pivots_[r]];
    if (x.is_zero()) continue;
    axpy(w, -x, basis_.row(r));
  }
  return w;
}

bool Subspace::contains(std::span<const FieldScalar> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_compatible(other);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  require_compatible(other);
  return row_space(Mat::stack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_compatible(other);
  const std::size_t n = ambient_dim_;
  const Field f = field();
  if (dim() == 0 || other.dim() == 0) return zero(f, n);
  // [A A; B 0]: rows of the echelon form whose left half vanishes span A ∩ B.
  Mat z(f, dim() + other.dim(), 2 * n);
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      z(r, c) = basis_(r, c);
      z(r, n + c) = basis_(r, c);
    }
  }
  for (std::size_t r = 0; r < other.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) z(dim() + r, c) = other.basis_(r, c);
  }
  RrefResult red = rref(std::move(z));
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < red.rank; ++r) {
    if (red.pivot_columns[r] < n) continue;
    auto row = red.matrix.row(r);
    rows.emplace_back(row.begin() + n, row.end());
  }
  return span(f, n, rows);
}

Subspace sum(const Subspace& a, const Subspace& b) { return a.sum(b); }
Subspace intersect(const Subspace& a, const Subspace& b) { return a.intersect(b); }
bool contains(const Subspace& a, std::span<const FieldScalar> v) { return a.contains(v); }

}  // namespace laddermat
