#ifndef LADDERMAT_LINALG_HPP
#define LADDERMAT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "laddermat/matrix.hpp"

namespace laddermat {

class Subspace;

struct RrefResult {
  Mat matrix;  // reduced row echelon form, same shape as the input
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination. Zero rows are kept (at the bottom).
RrefResult rref(Mat m);

/// Null space of m as a subspace of F^{cols}.
Subspace kernel(const Mat& m);

/// One particular solution of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

std::size_t rank(const Mat& m);

/// Solves a x = b for many right-hand sides against one factorization.
/// Free variables are set to zero.
class LinearSolver {
 public:
  explicit LinearSolver(Mat a);

  std::optional<Vec> solve(const Vec& b) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  Mat a_;
  std::vector<std::size_t> rows_;    // independent rows of a
  std::vector<std::size_t> pivots_;  // pivot column of each row of transform_
  Mat transform_;                    // rref(a[rows_]) = transform_ * a[rows_]
};

/// Sparse homogeneous linear system used for large constraint stacks.
///
/// The kernel is computed by splitting the unknowns into the connected
/// components of the row/column incidence graph and eliminating each
/// component densely; columns that appear in no row are free.
class SparseSystem {
 public:
  using Entry = std::pair<std::size_t, FieldScalar>;

  SparseSystem(Field field, std::size_t unknowns);

  /// Adds sum_k coeff_k x_{col_k} = 0. Repeated columns are summed;
  /// rows that cancel to zero are dropped.
  void add_row(std::vector<Entry> row);

  std::size_t unknowns() const { return unknowns_; }
  std::size_t row_count() const { return rows_.size(); }

  Subspace kernel() const;

 private:
  Field field_;
  std::size_t unknowns_;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace laddermat

#endif  // LADDERMAT_LINALG_HPP
