#include "laddermat/lie_algebra.hpp"

#include "laddermat/error.hpp"
#include "laddermat/linalg.hpp"

namespace laddermat {

Vec flatten(const Mat& m) { return m.entries(); }

Mat unflatten(const Field& field, int n, std::span<const FieldScalar> v) {
  const auto sz = static_cast<std::size_t>(n);
  if (v.size() != sz * sz) throw DimensionMismatch("vector length is not n^2");
  return Mat::from_entries(field, sz, sz, Vec(v.begin(), v.end()));
}

MatrixLieAlgebra::MatrixLieAlgebra(Field field, int n, std::vector<Mat> basis, bool require_closed)
    : field_(field), n_(n), basis_(std::move(basis)) {
  const auto sz = static_cast<std::size_t>(n_);
  const std::size_t d = basis_.size();
  Mat aug(field_, d, sz * sz + d);
  for (std::size_t k = 0; k < d; ++k) {
    if (basis_[k].rows() != sz || basis_[k].cols() != sz || basis_[k].field() != field_) {
      throw DimensionMismatch("basis matrix has the wrong shape or field");
    }
    const Vec& e = basis_[k].entries();
    for (std::size_t c = 0; c < e.size(); ++c) aug(k, c) = e[c];
    aug(k, sz * sz + k) = field_.one();
  }
  RrefResult red = rref(std::move(aug));
  if (d > 0 && (red.rank < d || red.pivot_columns[d - 1] >= sz * sz)) {
    throw DimensionMismatch("basis matrices are linearly dependent");
  }
  pivots_ = red.pivot_columns;
  echelon_ = Mat(field_, d, sz * sz);
  transform_ = Mat(field_, d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < sz * sz; ++c) echelon_(r, c) = red.matrix(r, c);
    for (std::size_t c = 0; c < d; ++c) transform_(r, c) = red.matrix(r, sz * sz + c);
  }

  unit_index_.assign(sz * sz, 0);
  for (std::size_t k = 0; k < d; ++k) {
    const Vec& e = basis_[k].entries();
    std::size_t ones = 0, pos = 0;
    for (std::size_t c = 0; c < e.size(); ++c) {
      if (e[c].is_zero()) continue;
      ++ones;
      pos = c;
      if (!e[c].is_one()) ones = 2;
    }
    if (ones != 1) {
      unit_index_.clear();
      break;
    }
    unit_index_[pos] = k + 1;
  }

  closed_ = true;
  structure_.resize(d * d);
  for (std::size_t a = 0; a < d && closed_; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (a == b) continue;
      if (b < a) {
        structure_[a * d + b] = structure_[b * d + a];
        for (auto& [k, coef] : structure_[a * d + b]) coef = -coef;
        continue;
      }
      auto coords = coordinates(commutator(basis_[a], basis_[b]));
      if (!coords) {
        closed_ = false;
        break;
      }
      SparseVec sv;
      for (std::size_t k = 0; k < d; ++k)
        if (!(*coords)[k].is_zero()) sv.emplace_back(k, (*coords)[k]);
      structure_[a * d + b] = std::move(sv);
    }
  }
  if (!closed_) {
    structure_.clear();
    if (require_closed) throw NotBracketClosed("basis span is not closed under the commutator");
  }
}

std::optional<Vec> MatrixLieAlgebra::coordinates(const Mat& m) const {
  const auto sz = static_cast<std::size_t>(n_);
  if (m.rows() != sz || m.cols() != sz) throw DimensionMismatch("matrix size differs from algebra size");
  const Vec& v = m.entries();
  const std::size_t d = dim();
  if (!unit_index_.empty()) {
    Vec coords = zero_vector(field_, d);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero()) continue;
      if (unit_index_[c] == 0) return std::nullopt;
      coords[unit_index_[c] - 1] = v[c];
    }
    return coords;
  }
  Vec coords = zero_vector(field_, d);
  Vec residual = v;
  for (std::size_t r = 0; r < d; ++r) {
    const FieldScalar x = residual[pivots_[r]];
    if (x.is_zero()) continue;
    axpy(coords, x, transform_.row(r));
    axpy(residual, -x, echelon_.row(r));
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

Vec MatrixLieAlgebra::coordinates_in_span(const Mat& m) const {
  auto c = coordinates(m);
  if (!c) throw NotBracketClosed("matrix lies outside the algebra");
  return std::move(*c);
}

Mat MatrixLieAlgebra::matrix_of(std::span<const FieldScalar> coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("coordinate vector length differs from dimension");
  const auto sz = static_cast<std::size_t>(n_);
  Mat m(field_, sz, sz);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (!coords[k].is_zero()) m += basis_[k] * coords[k];
  }
  return m;
}

const SparseVec& MatrixLieAlgebra::structure(std::size_t a, std::size_t b) const {
  if (!closed_) throw NotBracketClosed("structure constants of a non-closed span");
  static const SparseVec empty;
  if (a == b) return empty;
  return structure_[a * dim() + b];
}

Vec MatrixLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("bracket operand length");
  if (!closed_) return coordinates_in_span(commutator(matrix_of(x), matrix_of(y)));
  Vec out = zero_vector(field_, dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (y[b].is_zero() || a == b) continue;
      const FieldScalar s = x[a] * y[b];
      for (const auto& [k, coef] : structure(a, b)) out[k] += s * coef;
    }
  }
  return out;
}

Subspace MatrixLieAlgebra::span_in_gl() const {
  std::vector<Vec> rows;
  for (const auto& b : basis_) rows.push_back(flatten(b));
  return Subspace::span(field_, static_cast<std::size_t>(n_) * n_, rows);
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.host || !b.host || (a.host != b.host && !(*a.host == *b.host))) {
    throw AlgebraMismatch("operands belong to different algebras");
  }
  return AlgebraElement{a.host, a.host->bracket(a.coords, b.coords)};
}

std::shared_ptr<const MatrixLieAlgebra> subalgebra(const MatrixLieAlgebra& g, const Subspace& s,
                                                   bool require_closed) {
  if (s.ambient_dim() != g.dim()) throw DimensionMismatch("subspace ambient differs from algebra dimension");
  std::vector<Mat> basis;
  for (std::size_t k = 0; k < s.dim(); ++k) basis.push_back(g.matrix_of(s.basis().row(k)));
  return std::make_shared<const MatrixLieAlgebra>(g.field(), g.n(), std::move(basis), require_closed);
}

Subspace derived_subspace(const MatrixLieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw DimensionMismatch("subspace ambient differs from algebra dimension");
  std::vector<Vec> brackets;
  for (std::size_t a = 0; a < s.dim(); ++a) {
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      Vec v = g.bracket(s.basis_vector(a), s.basis_vector(b));
      if (!is_zero(v)) brackets.push_back(std::move(v));
    }
  }
  return Subspace::span(g.field(), g.dim(), brackets);
}

namespace {

// Kernel of X -> (w . vec([X, e]))_{w, e} over the basis e of g and the given functionals w.
Subspace commutator_constraint_kernel(const MatrixLieAlgebra& g, const std::vector<Vec>& functionals) {
  const Field f = g.field();
  const auto n = static_cast<std::size_t>(g.n());
  const std::size_t unknowns = n * n;
  std::vector<Vec> rows;
  for (const Mat& e : g.basis()) {
    // vec([X, e]) is linear in X: [E_pq, e] for each unknown X_pq.
    std::vector<Vec> images;
    images.reserve(unknowns);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) images.push_back(flatten(commutator(Mat::unit(f, n, p, q), e)));
    for (const Vec& w : functionals) {
      Vec row = zero_vector(f, unknowns);
      for (std::size_t u = 0; u < unknowns; ++u) {
        FieldScalar s = f.zero();
        for (std::size_t k = 0; k < w.size(); ++k)
          if (!w[k].is_zero() && !images[u][k].is_zero()) s += w[k] * images[u][k];
        row[u] = s;
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::full(f, unknowns);
  return kernel(Mat::from_rows(f, unknowns, rows));
}

}  // namespace

Subspace normalizer_in_gl(const MatrixLieAlgebra& g) {
  const Field f = g.field();
  const auto n2 = static_cast<std::size_t>(g.n()) * g.n();
  // Functionals vanishing on g: the kernel of the basis matrix.
  std::vector<Vec> basis_rows;
  for (const auto& b : g.basis()) basis_rows.push_back(flatten(b));
  Subspace ann = basis_rows.empty() ? Subspace::full(f, n2) : kernel(Mat::from_rows(f, n2, basis_rows));
  std::vector<Vec> functionals;
  for (std::size_t k = 0; k < ann.dim(); ++k) functionals.push_back(ann.basis_vector(k));
  return commutator_constraint_kernel(g, functionals);
}

Subspace centralizer_in_gl(const MatrixLieAlgebra& g) {
  const Field f = g.field();
  const auto n2 = static_cast<std::size_t>(g.n()) * g.n();
  std::vector<Vec> functionals;
  for (std::size_t k = 0; k < n2; ++k) {
    Vec w = zero_vector(f, n2);
    w[k] = f.one();
    functionals.push_back(std::move(w));
  }
  return commutator_constraint_kernel(g, functionals);
}

}  // namespace laddermat
