#include <gtest/gtest.h>

#include "casimir/error.hpp"
#include "casimir/expression.hpp"
#include "casimir/normalize.hpp"
#include "casimir/verify.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {
void expect_invariant_basis(const LieAlgebra& L, const NormalizationResult& r) {
  for (const auto& f : r.basis) EXPECT_TRUE(is_invariant(L, InvariantExpression::rational(f))) << f.to_string();
  EXPECT_EQ(r.n_g, static_cast<int>(r.basis.size()));
  EXPECT_EQ(r.rho + r.n_g, static_cast<int>(L.dim()));
}
}  // namespace

TEST(Normalize, G48MinusOne) {
  const LieAlgebra L = build_g48(Rational(-1));
  const auto r = normalize_algebra(L);
  ASSERT_EQ(r.basis.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(r.basis[k].to_string(), oracle::g48_minus1_normalize[k]);
  expect_invariant_basis(L, r);
}

TEST(Normalize, G48GenericHasNoInvariants) {
  for (const Rational& b : {Rational(1, 2), Rational(2), Rational(0), Rational(-3), Rational(5, 7)}) {
    const auto r = normalize_algebra(build_g48(b));
    EXPECT_EQ(r.n_g, 0) << b;
    EXPECT_EQ(r.rho, 4);
  }
}

TEST(Normalize, FamilyCounts) {
  for (int n = 2; n <= 6; ++n) {
    const LieAlgebra t0 = build_t0(n);
    const auto r = normalize_algebra(t0);
    EXPECT_EQ(r.n_g, n / 2);
    expect_invariant_basis(t0, r);
  }
  for (int n = 3; n <= 5; ++n) {
    const LieAlgebra st = build_st(n);
    const auto r = normalize_algebra(st);
    EXPECT_EQ(r.n_g, (n - 1) / 2);
    expect_invariant_basis(st, r);
  }
  for (int n = 2; n <= 4; ++n) {
    const LieAlgebra t = build_t(n);
    const auto r = normalize_algebra(t);
    EXPECT_EQ(r.n_g, (n + 1) / 2);
    expect_invariant_basis(t, r);
  }
}

TEST(Normalize, GenericEngineOnTriangularLifted) {
  const TriangularSpec spec{4, 1, {{1, 0, 0, 1}}};
  const auto r = normalize(lifted_triangular(spec));
  EXPECT_EQ(r.n_g, 3);
}

TEST(Normalize, HintsAreAdvisory) {
  const TriangularSpec spec{4, 1, {{0, 1, 0, 0}}};
  const auto reduced = reduce_gamma(spec);
  const auto hints = triangular_hints(reduced.reduced_spec(4), reduced);
  EXPECT_FALSE(hints.empty());
  const auto with = normalize(lifted_triangular(reduced.reduced_spec(4)), hints);
  const auto without = normalize(lifted_triangular(reduced.reduced_spec(4)));
  EXPECT_EQ(with.n_g, 1);
  EXPECT_EQ(without.n_g, 1);
}

TEST(Normalize, StuckOnNonNormalizableEntry) {
  LiftedInvariantSet set;
  set.coords = {Var::xg(1)};
  set.labels = {"I1"};
  set.entries = {parse_rational_function("x1*t[1]^2 + x1")};
  set.params = {Var::theta(1)};
  try {
    normalize(set);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NormalizationStuck);
  }
}

TEST(Normalize, TraceIsRecorded) {
  const auto r = normalize_algebra(build_t0(4));
  EXPECT_FALSE(r.trace.empty());
}
