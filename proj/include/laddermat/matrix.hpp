#ifndef LADDERMAT_MATRIX_HPP
#define LADDERMAT_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "laddermat/field.hpp"

namespace laddermat {

using Vec = std::vector<FieldScalar>;

/// Dense row-major matrix over a single exact field.
class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat zero(Field field, std::size_t rows, std::size_t cols) { return Mat(field, rows, cols); }
  static Mat identity(Field field, std::size_t n);
  /// The standard matrix unit E_{ij}, 0-based indices.
  static Mat unit(Field field, std::size_t n, std::size_t i, std::size_t j);
  /// Rows given as vectors; all of length `cols`.
  static Mat from_rows(Field field, std::size_t cols, std::span<const Vec> rows);
  /// Convenience for tests: integer entries.
  static Mat from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  FieldScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldScalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldScalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vector(std::size_t r) const;
  Vec column_vector(std::size_t c) const;

  /// Row-major flattening of all entries.
  const Vec& entries() const { return data_; }
  static Mat from_entries(Field field, std::size_t rows, std::size_t cols, Vec entries);

  Mat transpose() const;
  bool is_zero() const;
  FieldScalar trace() const;

  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(const FieldScalar& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const FieldScalar& s) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  /// Matrix-vector product.
  friend Vec operator*(const Mat& a, const Vec& v);

  friend bool operator==(const Mat& a, const Mat& b);

  /// Vertical concatenation.
  static Mat stack(const Mat& top, const Mat& bottom);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

/// XY - YX.
Mat commutator(const Mat& x, const Mat& y);

Vec zero_vector(const Field& field, std::size_t n);
bool is_zero(std::span<const FieldScalar> v);
/// a += s * b.
void axpy(std::span<FieldScalar> a, const FieldScalar& s, std::span<const FieldScalar> b);

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace laddermat

#endif  // LADDERMAT_MATRIX_HPP
