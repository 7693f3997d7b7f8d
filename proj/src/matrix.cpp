#include "laddermat/matrix.hpp"

#include <ostream>

#include "laddermat/error.hpp"

namespace laddermat {

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Mat Mat::unit(Field field, std::size_t n, std::size_t i, std::size_t j) {
  Mat m(field, n, n);
  m(i, j) = field.one();
  return m;
}

Mat Mat::from_rows(Field field, std::size_t cols, std::span<const Vec> rows) {
  Mat m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_ints(Field field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Mat m(field, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionMismatch("ragged integer matrix");
    std::size_t c = 0;
    for (long long v : row) m(r, c++) = field.from_int(v);
    ++r;
  }
  return m;
}

Mat Mat::from_entries(Field field, std::size_t rows, std::size_t cols, Vec entries) {
  if (entries.size() != rows * cols) throw DimensionMismatch("entry count does not match shape");
  Mat m;
  m.field_ = field;
  m.rows_ = rows;
  m.cols_ = cols;
  m.data_ = std::move(entries);
  return m;
}

Vec Mat::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec Mat::column_vector(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const { return laddermat::is_zero(data_); }

FieldScalar Mat::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of a non-square matrix");
  FieldScalar s = field_.zero();
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

Mat& Mat::operator+=(const Mat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Mat& Mat::operator*=(const FieldScalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes differ");
  Mat out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      axpy(out.row(i), aik, b.row(k));
    }
  }
  return out;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shapes differ");
  Vec out = zero_vector(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Mat Mat::stack(const Mat& top, const Mat& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw DimensionMismatch("stacked matrices differ in width");
  Mat m = top;
  m.rows_ += bottom.rows_;
  m.data_.insert(m.data_.end(), bottom.data_.begin(), bottom.data_.end());
  return m;
}

Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

Vec zero_vector(const Field& field, std::size_t n) { return Vec(n, field.zero()); }

bool is_zero(std::span<const FieldScalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(std::span<FieldScalar> a, const FieldScalar& s, std::span<const FieldScalar> b) {
  if (a.size() != b.size()) throw DimensionMismatch("axpy length mismatch");
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!b[k].is_zero()) a[k] += s * b[k];
  }
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

}  // namespace laddermat
