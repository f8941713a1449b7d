#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "casimir/rational_function.hpp"

namespace casimir {

/// Dense matrix with entries of type T, stored row-major. Indices are
/// zero-based.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1L);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using SymMatrix = Matrix<RationalFunction>;
using QMatrix = Matrix<Rational>;

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);

/// Exact determinant: cofactor expansion up to 3x3, Bareiss elimination on
/// row-cleared polynomial entries beyond.
RationalFunction determinant(const SymMatrix& m);
Rational determinant(const QMatrix& m);

/// Inverse of an upper triangular matrix with nonzero diagonal.
SymMatrix invert_upper_triangular(const SymMatrix& m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(QMatrix& m);
std::size_t rank(QMatrix m);
/// Basis of the right null space, one vector per free column.
std::vector<std::vector<Rational>> kernel(const QMatrix& m);
QMatrix inverse(const QMatrix& m);

std::string to_string(const SymMatrix& m);

}  // namespace casimir
