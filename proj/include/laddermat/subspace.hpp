#ifndef LADDERMAT_SUBSPACE_HPP
#define LADDERMAT_SUBSPACE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "laddermat/matrix.hpp"

namespace laddermat {

/// A subspace of F^{ambient_dim} stored by its canonical basis: the nonzero
/// rows of the reduced row echelon form of any spanning set. Equal
/// subspaces have identical bases, so equality is grid equality.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace full(Field field, std::size_t ambient_dim);
  static Subspace span(Field field, std::size_t ambient_dim, std::span<const Vec> vectors);
  /// Row space of m.
  static Subspace row_space(const Mat& m);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t k) const { return basis_.row_vector(k); }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  bool contains(std::span<const FieldScalar> v) const;
  bool contains(const Subspace& other) const;
  /// v reduced against the canonical basis (zero iff v is in the subspace).
  Vec reduce(std::span<const FieldScalar> v) const;

  Subspace sum(const Subspace& other) const;
  /// Zassenhaus double-block elimination.
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient_dim, Mat canonical, std::vector<std::size_t> pivots);
  void require_compatible(const Subspace& other) const;

  std::size_t ambient_dim_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, std::span<const FieldScalar> v);

}  // namespace laddermat

#endif  // LADDERMAT_SUBSPACE_HPP
