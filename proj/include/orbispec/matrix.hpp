#pragma once

#include "orbispec/error.hpp"
#include "orbispec/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace orbispec {

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiplication overflow");
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 addition overflow");
  return r;
}
inline Rational checked_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational checked_add(const Rational& a, const Rational& b) { return a + b; }
inline Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer checked_add(const Integer& a, const Integer& b) { return a + b; }

}  // namespace detail

// Dense row-major matrix. Used with T = Rational (exact metric data),
// T = Integer (normal forms) and T = std::int64_t (linear parts of
// isometries in lattice coordinates; all products overflow-checked).
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  // Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) = detail::checked_add(c(i, j), detail::checked_mul(aik, b(k, j)));
      }
    return c;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector dimension mismatch");
    std::vector<T> r(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        r[i] = detail::checked_add(r[i], detail::checked_mul(a(i, k), v[k]));
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = detail::checked_add(c.data_[i], b.data_[i]);
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
      c.data_[i] = detail::checked_add(c.data_[i], detail::checked_mul(T(-1), b.data_[i]));
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;
using IntMatrix = Matrix<std::int64_t>;

RatMatrix to_rational(const IntMatrix& m);
IntegerMatrix to_integer(const IntMatrix& m);
// Throws OverflowError / Error when entries are not integral or too large.
IntMatrix to_int(const RatMatrix& m);
IntMatrix to_int(const IntegerMatrix& m);

bool is_integral(const RatMatrix& m);
bool is_symmetric(const RatMatrix& m);

Rational determinant(const RatMatrix& m);
std::int64_t determinant(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
// Reduced row echelon form; pivot column indices written to *pivots.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);
std::optional<RatMatrix> inverse(const RatMatrix& m);
// Inverse of a matrix in GL(n, Z); throws Error if not unimodular.
IntMatrix inverse_unimodular(const IntMatrix& m);
// Sum of the principal k x k minors: the k-th elementary symmetric function
// of the eigenvalues, via the characteristic polynomial.
std::vector<Rational> charpoly_coefficients(const RatMatrix& m);
std::vector<std::int64_t> charpoly_coefficients(const IntMatrix& m);

std::string to_string(const IntMatrix& m);
std::string to_string(const RatMatrix& m);

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const;
};

}  // namespace orbispec
