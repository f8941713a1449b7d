#include <gtest/gtest.h>

#include "casimir/closedform.hpp"
#include "casimir/coadjoint.hpp"
#include "casimir/error.hpp"
#include "casimir/verify.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {
std::vector<std::string> strings(const std::vector<InvariantExpression>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(e.to_string());
  return out;
}

TriangularSpec spec(int n, std::vector<std::vector<Rational>> g) {
  return TriangularSpec{n, static_cast<int>(g.size()), std::move(g)};
}
}  // namespace

TEST(ClosedForm, BorderedDeterminantSmall) {
  const SymMatrix X = coordinate_matrix(3);
  EXPECT_EQ(bordered_det_x(X, 2, 1), parse_rational_function("x[2,1]*x[3,2]"));
}

TEST(ClosedForm, BorderedDeterminantN5) {
  const SymMatrix X = coordinate_matrix(5);
  // Expansion along the top row (x[3,1], x[3,2], 0) of
  // [[x31, x32, 0], [x41, x42, x43], [x51, x52, x53]].
  const RationalFunction expected = parse_rational_function(
      "x[3,1]*(x[4,2]*x[5,3] - x[4,3]*x[5,2]) - x[3,2]*(x[4,1]*x[5,3] - x[4,3]*x[5,1])");
  EXPECT_EQ(bordered_det_x(X, 3, 2), expected);
}

TEST(ClosedForm, BorderedDeterminantBounds) {
  const SymMatrix X = coordinate_matrix(5);
  for (auto [i, k] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {3, 3}, {3, 0}}) {
    try {
      bordered_det_x(X, i, k);
      FAIL() << i << "," << k;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::IndexError);
    }
  }
}

TEST(ClosedForm, RelativeInvariants) {
  const auto two = relative_invariants(spec(2, {}));
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], parse_rational_function(oracle::relative_n2[0]));
  const auto four = relative_invariants(spec(4, {}));
  ASSERT_EQ(four.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(four[k], parse_rational_function(oracle::relative_n4[k]));
  EXPECT_EQ(relative_invariants(spec(5, {})).size(), 2u);
}

TEST(ClosedForm, RelativeInvariantsScale) {
  const TriangularSpec s = spec(5, {{1, 0, 2, 0, 0}});
  const LieAlgebra L = build_t_gamma(s);
  for (const auto& F : relative_invariants(s)) {
    for (std::size_t i = 0; i < L.dim(); ++i) {
      EXPECT_TRUE((infinitesimal_apply(L, i, F) / F).is_constant());
    }
  }
}

TEST(ClosedForm, T0Casimirs) {
  const TriangularSpec s = spec(4, {});
  EXPECT_EQ(strings(algebra_basis(s, reduce_gamma(s))), oracle::t0_4_closed_form);
  const auto x = coadjoint_basis(s, reduce_gamma(s));
  EXPECT_EQ(x[0].value(), parse_rational_function("x[4,1]"));
}

TEST(ClosedForm, St3) {
  const TriangularSpec s = st_spec(3);
  const auto basis = algebra_basis(s, reduce_gamma(s));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].kind(), InvariantExpression::Kind::Affine);
  EXPECT_EQ(basis[0].to_string(), oracle::st3_closed_form);
  EXPECT_EQ(strings(st_basis(3)), std::vector<std::string>{oracle::st3_closed_form});
}

TEST(ClosedForm, SingleNilindependentSymmetricCase) {
  const TriangularSpec s = spec(4, {{1, 0, 0, 1}});
  const auto r = reduce_gamma(s);
  EXPECT_EQ(r.s_prime, 0);
  EXPECT_EQ(strings(algebra_basis(s, r)), oracle::tg4_closed_form);
}

TEST(ClosedForm, FractionalExponent) {
  const TriangularSpec s = spec(4, {{0, 1, 0, 2}});
  const auto basis = algebra_basis(s, reduce_gamma(s));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].to_string(), oracle::tg4_fractional);
  EXPECT_TRUE(is_invariant(build_t_gamma(s), basis[0]));
}

TEST(ClosedForm, SingleNilindependentExponents) {
  // s = 1, s' = 1: exponents alpha_k = -sum_{i=k0}^k (g_{n-i+1} - g_i) / (g_{n-k0+1} - g_{k0}).
  const std::vector<Rational> g{0, 1, 3, 0, 2, 1};
  const int n = 6;
  const TriangularSpec s = spec(n, {g});
  const auto basis = coadjoint_basis(s, reduce_gamma(s));
  ASSERT_EQ(basis.size(), 2u);
  const int k0 = 1;
  const Rational den = g[n - k0] - g[k0 - 1];
  for (int k = 2; k <= 3; ++k) {
    Rational alpha = 0;
    for (int i = k0; i <= k; ++i) alpha -= (g[n - i] - g[i - 1]) / den;
    const auto& fs = basis[static_cast<std::size_t>(k - 2)].factors();
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs[1].first, parse_rational_function("x[6,1]"));
    EXPECT_EQ(fs[1].second, alpha) << k;
  }
}

TEST(ClosedForm, TBasis) {
  EXPECT_EQ(strings(t_basis(2)), std::vector<std::string>{"e[1,1] + e[2,2]"});
  EXPECT_EQ(strings(t_basis(3)), oracle::t3_closed_form);
  EXPECT_EQ(t_basis(6).size(), 3u);
}

TEST(ClosedForm, RationalBasisCriterion) {
  EXPECT_TRUE(has_rational_basis(reduce_gamma(spec(4, {}))));
  EXPECT_TRUE(has_rational_basis(reduce_gamma(st_spec(4))));
  EXPECT_TRUE(has_rational_basis(reduce_gamma(spec(5, {{1, 0, 2, 0, 0}, {0, 1, 0, 3, 1}}))));
}

TEST(ClosedForm, FamilyDispatch) {
  EXPECT_EQ(strings(closed_form_basis(build_g48(Rational(-1)))), oracle::g48_minus1_closed_form);
  EXPECT_TRUE(closed_form_basis(build_g48(Rational(1, 2))).empty());
  LieAlgebra plain({Var::eg(1), Var::eg(2)});
  try {
    closed_form_basis(plain);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SpecError);
  }
}

TEST(ClosedForm, RejectsUnreducedGamma) {
  const TriangularSpec s = spec(4, {{0, 1, 0, 2}});
  ReducedGamma r = reduce_gamma(s);
  r.gamma_reduced = s.gamma;
  EXPECT_THROW(coadjoint_basis(s, r), Error);
}
