#include <gtest/gtest.h>

#include "casimir/error.hpp"
#include "casimir/expression.hpp"
#include "casimir/rational_function.hpp"

using namespace casimir;

namespace {
RationalFunction R(const char* s) { return parse_rational_function(s); }
}  // namespace

TEST(RationalFunction, CancelsMonomialsAndContent) {
  EXPECT_EQ(R("(2*x1^2*x2)/(4*x1*x2^2)").to_string(), "1/2*x1/x2");
  EXPECT_EQ(R("(x1^2 - x2^2)/(x1 - x2)").to_string(), "x1 + x2");
}

TEST(RationalFunction, LaurentAndQuotientPrinting) {
  EXPECT_EQ(R("x4 - x2*x3/x1").to_string(), "x4 - x2*x3/x1");
  EXPECT_EQ(R("1/(x1 + x2)").to_string(), "1/(x1 + x2)");
}

TEST(RationalFunction, EqualityByCrossMultiplication) {
  EXPECT_EQ(R("(x1*x2 + x1)/(x2^2 + x2)"), R("x1/x2"));
  EXPECT_NE(R("x1/x2"), R("x2/x1"));
}

TEST(RationalFunction, FieldOperations) {
  const RationalFunction a = R("x1/(x1 + 1)");
  const RationalFunction b = R("1/(x1 + 1)");
  EXPECT_EQ(a + b, RationalFunction(1L));
  EXPECT_EQ(a / a, RationalFunction(1L));
  EXPECT_EQ(R("x1").pow(-2), R("1/x1^2"));
  EXPECT_THROW(RationalFunction().inverse(), Error);
}

TEST(RationalFunction, DerivativeQuotientRule) {
  const RationalFunction f = R("x1/(x1 + x2)");
  EXPECT_EQ(f.derivative(Var::xg(1)), R("x2/(x1 + x2)^2"));
}

TEST(RationalFunction, SubstituteRaisesOnSingularDenominator) {
  const RationalFunction f = R("1/(x1 - x2)");
  EXPECT_THROW(f.substitute({{Var::xg(2), R("x1")}}), Error);
  EXPECT_EQ(f.substitute({{Var::xg(2), R("0")}}), R("1/x1"));
}

TEST(RationalFunction, EvaluateRaisesOnPole) {
  const RationalFunction f = R("1/(x1 - 2)");
  EXPECT_EQ(f.evaluate({{Var::xg(1), Rational(3)}}), Rational(1));
  try {
    f.evaluate({{Var::xg(1), Rational(2)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(RationalFunction, SolveLinear) {
  const Var b = Var::b(1, 2);
  const RationalFunction eq = RationalFunction(Var::xg(1)) * RationalFunction(b) + RationalFunction(Var::xg(2));
  EXPECT_EQ(solve_linear_for(eq, b), R("-x2/x1"));
  try {
    solve_linear_for(eq * RationalFunction(b), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLinear);
  }
  try {
    solve_linear_for(R("x1"), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLinear);
  }
}
