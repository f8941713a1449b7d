#include "casimir/matrix.hpp"

#include <sstream>
#include <utility>

#include "casimir/error.hpp"

namespace casimir {

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::ShapeError, "matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(r, k);
      if (x == T(0L)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b(k, c) == T(0L)) continue;
        out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

// Bareiss fraction-free elimination on polynomial entries.
Polynomial bareiss(std::vector<std::vector<Polynomial>> a) {
  const std::size_t n = a.size();
  Polynomial prev(Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return Polynomial();
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = v.divide_exact(prev);
        if (!q) fail(ErrorKind::SingularMatrix, "inexact Bareiss step");
        a[i][j] = std::move(*q);
      }
    }
    prev = a[k][k];
  }
  Polynomial d = a[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

template <typename T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1L);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T out(0L);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == T(0L)) continue;
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
        if (cc != c) minor(r - 1, k++) = m(r, cc);
      }
    }
    T term = m(0, c) * cofactor_det(minor);
    if (c % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

}  // namespace

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) { return multiply(a, b); }
QMatrix operator*(const QMatrix& a, const QMatrix& b) { return multiply(a, b); }

RationalFunction determinant(const SymMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::ShapeError, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n <= 3) return cofactor_det(m);
  // Clear denominators row by row, then eliminate fraction-free.
  std::vector<std::vector<Polynomial>> rows(n, std::vector<Polynomial>(n));
  Polynomial scale(Rational(1));
  for (std::size_t r = 0; r < n; ++r) {
    Polynomial common(Rational(1));
    for (std::size_t c = 0; c < n; ++c) {
      const auto& d = m(r, c).denominator();
      if (d.is_constant() || common.divide_exact(d)) continue;
      common = common * d;
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = m(r, c);
      if (e.is_zero()) continue;
      rows[r][c] = e.numerator() * *common.divide_exact(e.denominator());
    }
    scale = scale * common;
  }
  return RationalFunction(bareiss(std::move(rows)), scale);
}

Rational determinant(const QMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::ShapeError, "determinant of a non-square matrix");
  QMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

SymMatrix invert_upper_triangular(const SymMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::ShapeError, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  for (std::size_t r = 0; r < n; ++r) {
    if (m(r, r).is_zero()) fail(ErrorKind::SingularMatrix, "zero diagonal entry");
    for (std::size_t c = 0; c < r; ++c) {
      if (!m(r, c).is_zero()) fail(ErrorKind::ShapeError, "matrix is not upper triangular");
    }
  }
  SymMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    inv(j, j) = m(j, j).inverse();
    for (std::size_t i = j; i-- > 0;) {
      RationalFunction acc;
      for (std::size_t l = i + 1; l <= j; ++l) {
        if (m(i, l).is_zero() || inv(l, j).is_zero()) continue;
        acc += m(i, l) * inv(l, j);
      }
      inv(i, j) = -acc / m(i, i);
    }
  }
  return inv;
}

std::vector<std::size_t> row_reduce(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return row_reduce(m).size(); }

std::vector<std::vector<Rational>> kernel(const QMatrix& m) {
  QMatrix a = m;
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::ShapeError, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] >= n) fail(ErrorKind::SingularMatrix, "matrix is singular");
  QMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

std::string to_string(const SymMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).to_string();
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace casimir
