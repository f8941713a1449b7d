#include <gtest/gtest.h>

#include "casimir/error.hpp"
#include "casimir/expression.hpp"
#include "casimir/matrix.hpp"

using namespace casimir;

namespace {
SymMatrix sym(const std::vector<std::vector<const char*>>& rows) {
  SymMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = parse_rational_function(rows[r][c]);
  }
  return m;
}

RationalFunction laplace(const SymMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  RationalFunction out;
  for (std::size_t c = 0; c < n; ++c) {
    SymMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t k = 0, d = 0; k < n; ++k) {
        if (k != c) minor(r - 1, d++) = m(r, k);
      }
    }
    const RationalFunction t = m(0, c) * laplace(minor);
    out += c % 2 == 0 ? t : -t;
  }
  return out;
}
}  // namespace

TEST(Matrix, SmallDeterminants) {
  EXPECT_EQ(determinant(sym({{"x1", "x2"}, {"x3", "x4"}})), parse_rational_function("x1*x4 - x2*x3"));
  EXPECT_EQ(determinant(sym({{"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "10"}})), RationalFunction(-3L));
}

TEST(Matrix, BareissMatchesExpansion) {
  const SymMatrix m = sym({{"x1", "1", "0", "x2"},
                           {"0", "x3", "1", "0"},
                           {"1/x1", "0", "x4", "1"},
                           {"x2", "1", "0", "x1"}});
  EXPECT_EQ(determinant(m), laplace(m));
  EXPECT_EQ(determinant(m), determinant(m.transpose()));
}

TEST(Matrix, VandermondeDeterminant) {
  SymMatrix v(4, 4);
  for (unsigned r = 0; r < 4; ++r) {
    for (unsigned c = 0; c < 4; ++c) v(r, c) = RationalFunction(Var::xg(r + 1)).pow(static_cast<long>(c));
  }
  RationalFunction expected(1L);
  for (unsigned i = 1; i <= 4; ++i) {
    for (unsigned j = i + 1; j <= 4; ++j) expected *= RationalFunction(Var::xg(j)) - RationalFunction(Var::xg(i));
  }
  EXPECT_EQ(determinant(v), expected);
}

TEST(Matrix, TriangularInverse) {
  const SymMatrix b = sym({{"E[1]", "b[1,2]", "b[1,3]"}, {"0", "E[1]^2", "b[2,3]"}, {"0", "0", "1"}});
  EXPECT_EQ(b * invert_upper_triangular(b), SymMatrix::identity(3));
  EXPECT_THROW(invert_upper_triangular(sym({{"x1", "x2"}, {"x3", "x4"}})), Error);
}

TEST(Matrix, RationalLinearAlgebra) {
  QMatrix m(3, 3);
  const int vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = vals[r][c];
  }
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(determinant(m), Rational(0));
  const auto ker = kernel(m);
  ASSERT_EQ(ker.size(), 1u);
  for (std::size_t r = 0; r < 3; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < 3; ++c) acc += m(r, c) * ker[0][c];
    EXPECT_EQ(acc, 0);
  }
  EXPECT_THROW(inverse(m), Error);
  m(1, 1) = 5;
  EXPECT_EQ(m * inverse(m), QMatrix::identity(3));
}
