#pragma once

// Dense exact matrices over Z and Q backed by GMP.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "obstruct/error.hpp"

namespace obstruct {

using Int = mpz_class;
using Rational = mpq_class;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix r = a;
    for (auto& v : r.data_) v = -v;
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& v : r.data_) v *= s;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant. The empty matrix has determinant 1.
Int determinant(const IntMatrix& m);

/// Exact inverse over Q; throws SingularMatrixError when det = 0.
RatMatrix inverse(const IntMatrix& m);

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Counts of positive, negative and zero entries after congruence
/// diagonalization of a symmetric matrix over Q.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
};

Inertia congruence_inertia(const IntMatrix& symmetric);

std::string to_string(const IntMatrix& m);

}  // namespace obstruct
