#include <gtest/gtest.h>

#include "casimir/closedform.hpp"
#include "casimir/error.hpp"
#include "casimir/uea.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {
NCPolynomial from_text(const char* s, const LieAlgebra& L) {
  return from_polynomial(parse_rational_function(s).as_polynomial(), L);
}
}  // namespace

TEST(Uea, SwapUsesBracket) {
  const LieAlgebra L = build_g48(Rational(1, 3));
  EXPECT_EQ(nc_normalize(NCWord{2, 1}, L).to_string(L), oracle::g48_word_32);
}

TEST(Uea, SortedWordUnchanged) {
  const LieAlgebra L = build_g48(Rational(1, 3));
  EXPECT_EQ(nc_normalize(NCWord{0, 1, 1, 3}, L), NCPolynomial(NCWord{0, 1, 1, 3}));
}

TEST(Uea, T0Swap) {
  const LieAlgebra L = build_t0(3);
  const std::size_t e12 = *L.index_of(Var::e(1, 2));
  const std::size_t e23 = *L.index_of(Var::e(2, 3));
  EXPECT_EQ(nc_normalize(NCWord{e23, e12}, L).to_string(L), "e[1,2]*e[2,3] - e[1,3]");
}

TEST(Uea, SymOfCommutingLettersIsIdentity) {
  const LieAlgebra L = build_g48(Rational(-1));
  EXPECT_EQ(sym(from_text("e1*e4", L), L), from_text("e1*e4", L));
}

TEST(Uea, SymOfNoncommutingPair) {
  const LieAlgebra L = build_g48(Rational(2));
  EXPECT_EQ(sym(from_text("e2*e3", L), L).to_string(L), "e2*e3 - 1/2*e1");
}

TEST(Uea, G48Casimir) {
  const LieAlgebra L = build_g48(Rational(-1));
  const NCPolynomial C = sym(from_text("e1*e4 - e2*e3", L), L);
  EXPECT_EQ(C.to_string(L), oracle::g48_casimir_pbw);
  EXPECT_TRUE(is_casimir(C, L));
  // The unsymmetrized product differs by e1/2 and is still central.
  EXPECT_TRUE(is_casimir(from_text("e1*e4 - e2*e3", L), L));
}

TEST(Uea, CasimirDetection) {
  const LieAlgebra L = build_t0(3);
  EXPECT_TRUE(is_casimir(NCPolynomial(NCWord{*L.index_of(Var::e(1, 3))}), L));
  EXPECT_FALSE(is_casimir(NCPolynomial(NCWord{*L.index_of(Var::e(1, 2))}), L));
}

TEST(Uea, SymmetrizeInvariant) {
  const LieAlgebra t0 = build_t0(3);
  EXPECT_EQ(symmetrize_invariant(parse_expression("x[3,1]"), t0).to_string(t0), "e[1,3]");
  const LieAlgebra g = build_g48(Rational(-1));
  EXPECT_EQ(symmetrize_invariant(parse_expression("x1*x4 - x2*x3"), g).to_string(g), oracle::g48_casimir_pbw);
  const LieAlgebra st = build_st(3);
  const auto s = symmetrize_invariant(st_basis(3)[0], st);
  ASSERT_TRUE(s.denominator.has_value());
  EXPECT_EQ(s.to_string(st), oracle::st3_symmetrized);
}

TEST(Uea, FractionalPowerNotSymmetrizable) {
  const LieAlgebra L = build_t_gamma(TriangularSpec{4, 1, {{0, 1, 0, 2}}});
  try {
    symmetrize_invariant(parse_expression(oracle::tg4_fractional), L);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetrizable);
  }
}
