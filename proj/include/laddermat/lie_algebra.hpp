#ifndef LADDERMAT_LIE_ALGEBRA_HPP
#define LADDERMAT_LIE_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "laddermat/matrix.hpp"
#include "laddermat/subspace.hpp"

namespace laddermat {

/// Sparse coordinate vector: (basis index, nonzero coefficient), ascending.
using SparseVec = std::vector<std::pair<std::size_t, FieldScalar>>;

/// A finite-dimensional subspace of gl(n, F) given by an ordered basis of
/// n x n matrices, with coordinates and (when closed under the commutator)
/// structure constants.
class MatrixLieAlgebra {
 public:
  /// Throws DimensionMismatch when the basis is dependent or mis-shaped, and
  /// NotBracketClosed when `require_closed` and some [e_a, e_b] leaves the span.
  MatrixLieAlgebra(Field field, int n, std::vector<Mat> basis, bool require_closed = true);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }
  const Mat& basis_element(std::size_t k) const { return basis_[k]; }
  bool bracket_closed() const { return closed_; }

  /// Coordinates of m, or nullopt when m is outside the span.
  std::optional<Vec> coordinates(const Mat& m) const;
  /// Same, but throws NotBracketClosed when m is outside the span.
  Vec coordinates_in_span(const Mat& m) const;
  Mat matrix_of(std::span<const FieldScalar> coords) const;

  /// Structure constants: coordinates of [e_a, e_b].
  const SparseVec& structure(std::size_t a, std::size_t b) const;
  /// Bracket in coordinates.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// The span as a subspace of F^{n^2} (row-major flattening).
  Subspace span_in_gl() const;

  /// Same field, size and basis.
  friend bool operator==(const MatrixLieAlgebra& a, const MatrixLieAlgebra& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  int n_ = 0;
  std::vector<Mat> basis_;
  bool closed_ = false;
  // coords(v) = sum_r v[pivots_[r]] * transform_.row(r); echelon_ spans the basis.
  std::vector<std::size_t> pivots_;
  Mat transform_;
  Mat echelon_;
  std::vector<SparseVec> structure_;  // a * dim + b
  // Set when every basis element is a matrix unit: flat position -> index + 1.
  std::vector<std::size_t> unit_index_;
};

/// An element of a matrix Lie algebra, held in basis coordinates.
struct AlgebraElement {
  std::shared_ptr<const MatrixLieAlgebra> host;
  Vec coords;

  Mat matrix() const { return host->matrix_of(coords); }
};

/// Throws AlgebraMismatch unless both elements live in the same algebra.
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

/// The subalgebra spanned by `s` (coordinates relative to g), with the
/// canonical basis of `s` as its ordered basis.
std::shared_ptr<const MatrixLieAlgebra> subalgebra(const MatrixLieAlgebra& g, const Subspace& s,
                                                   bool require_closed = true);

/// [S, S] inside g: span of brackets of basis vectors of s.
Subspace derived_subspace(const MatrixLieAlgebra& g, const Subspace& s);

/// Brute-force normalizer {X in gl_n : [X, g] in g} in F^{n^2}.
Subspace normalizer_in_gl(const MatrixLieAlgebra& g);
/// Brute-force centralizer {X in gl_n : [X, g] = 0} in F^{n^2}.
Subspace centralizer_in_gl(const MatrixLieAlgebra& g);

/// Row-major reshape helpers between n x n matrices and F^{n^2}.
Vec flatten(const Mat& m);
Mat unflatten(const Field& field, int n, std::span<const FieldScalar> v);

}  // namespace laddermat

#endif  // LADDERMAT_LIE_ALGEBRA_HPP
