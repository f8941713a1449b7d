#include <gtest/gtest.h>

#include "casimir/algebra.hpp"
#include "casimir/error.hpp"

using namespace casimir;

namespace {
TriangularSpec spec(int n, std::vector<std::vector<Rational>> g) {
  return TriangularSpec{n, static_cast<int>(g.size()), std::move(g)};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::ParseError;
}
}  // namespace

TEST(Algebra, FamilyDimensionsAndJacobi) {
  EXPECT_EQ(build_t0(4).dim(), 6u);
  EXPECT_EQ(build_t(4).dim(), 10u);
  EXPECT_EQ(build_st(4).dim(), 9u);
  EXPECT_EQ(build_g48(Rational(1, 2)).dim(), 4u);
  for (const auto& L : {build_t0(5), build_t(4), build_st(4), build_g48(Rational(-1)),
                        build_t_gamma(spec(4, {{1, 0, 0, 1}, {0, 1, 2, 0}}))}) {
    EXPECT_TRUE(validate(L).empty());
  }
}

TEST(Algebra, G48Brackets) {
  const LieAlgebra L = build_g48(Rational(2));
  EXPECT_EQ(L.structure_constant(1, 2, 0), Rational(1));
  EXPECT_EQ(L.structure_constant(0, 3, 0), Rational(3));
  EXPECT_EQ(L.structure_constant(2, 3, 2), Rational(2));
  EXPECT_EQ(L.structure_constant(3, 2, 2), Rational(-2));
}

TEST(Algebra, TGammaBracketOfDiagonal) {
  const LieAlgebra L = build_t_gamma(spec(3, {{-1, 0, 5}}));
  const auto f = *L.index_of(Var::f(1));
  const auto e13 = *L.index_of(Var::e(1, 3));
  EXPECT_EQ(L.structure_constant(f, e13, e13), Rational(-6));
}

TEST(Algebra, JacobiViolationDetected) {
  LieAlgebra L({Var::eg(1), Var::eg(2), Var::eg(3)});
  L.set_bracket(0, 1, {{2, Rational(1)}});
  L.set_bracket(1, 2, {{0, Rational(1)}});
  L.set_bracket(0, 2, {{0, Rational(1)}});
  EXPECT_FALSE(validate(L).empty());
}

TEST(Algebra, SpecValidation) {
  EXPECT_EQ(kind_of([] { spec(3, {{1, 1, 1}}).validate(); }), ErrorKind::SpecError);
  EXPECT_EQ(kind_of([] { spec(3, {{1, 0, 0}, {2, 0, 0}}).validate(); }), ErrorKind::SpecError);
  EXPECT_EQ(kind_of([] { spec(1, {}).validate(); }), ErrorKind::SpecError);
  EXPECT_EQ(kind_of([] { spec(3, {{1, 0}}).validate(); }), ErrorKind::SpecError);
  EXPECT_NO_THROW(spec(3, {{1, 0, 0}, {0, 1, 0}}).validate());
}

TEST(Algebra, ReduceGammaSingleRow) {
  const ReducedGamma r = reduce_gamma(spec(4, {{0, 1, 0, 0}}));
  EXPECT_EQ(r.s_prime, 1);
  EXPECT_EQ(r.k_list, std::vector<int>{2});
  EXPECT_EQ(r.gamma_reduced[0], (std::vector<Rational>{0, -1, 0, 0}));
  EXPECT_EQ(check_reduced_form(4, r), "");
}

TEST(Algebra, ReduceGammaSt) {
  for (int n = 3; n <= 7; ++n) {
    const TriangularSpec s = st_spec(n);
    const ReducedGamma r = reduce_gamma(s);
    EXPECT_EQ(r.s_prime, n / 2) << n;
    EXPECT_EQ(r.s_prime, gamma_difference_rank(s));
    EXPECT_EQ(check_reduced_form(n, r), "") << n;
  }
}

TEST(Algebra, ReduceGammaRowTransform) {
  const TriangularSpec s = spec(5, {{1, 0, 2, 0, 0}, {0, 1, 0, 3, 1}});
  const ReducedGamma r = reduce_gamma(s);
  for (int p = 0; p < s.s; ++p) {
    for (int i = 0; i < s.n; ++i) {
      Rational acc = 0;
      for (int q = 0; q < s.s; ++q) acc += r.row_transform(p, q) * s.gamma[q][i];
      EXPECT_EQ(acc, r.gamma_reduced[p][i]);
    }
  }
}

TEST(Algebra, CenterDimension) {
  EXPECT_EQ(center_dim(build_t(4)), 1u);
  EXPECT_EQ(center_dim(build_t0(4)), 1u);
  EXPECT_EQ(center_dim(build_g48(Rational(-1))), 1u);
}

TEST(Algebra, JsonShorthandRoundTrip) {
  const LieAlgebra L = parse_algebra_json(R"({"family": "t_gamma", "n": 4, "gamma": [["1", 0, 0, "1/2"]]})");
  EXPECT_EQ(L.dim(), 7u);
  const LieAlgebra back = parse_algebra_json(algebra_to_json(L));
  EXPECT_EQ(back.family()->spec.gamma, L.family()->spec.gamma);
  const LieAlgebra full = parse_algebra_json(algebra_to_json(L, true));
  EXPECT_FALSE(full.family().has_value());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = 0; j < L.dim(); ++j) EXPECT_EQ(full.bracket(i, j), L.bracket(i, j));
  }
}

TEST(Algebra, JsonFullForm) {
  const LieAlgebra L = parse_algebra_json(
      R"({"dim": 3, "basis": ["e1", "e2", "e3"], "brackets": [{"i": 1, "j": 2, "terms": [{"k": 3, "c": 1}]}]})");
  EXPECT_EQ(L.structure_constant(0, 1, 2), Rational(1));
  EXPECT_EQ(L.structure_constant(1, 0, 2), Rational(-1));
}

TEST(Algebra, JsonErrors) {
  EXPECT_EQ(kind_of([] { parse_algebra_json("{"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_algebra_json(R"({"family": "nope", "n": 3})"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] {
              parse_algebra_json(R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "terms": []},
                                                            {"i": 2, "j": 1, "terms": []}]})");
            }),
            ErrorKind::SpecError);
}
