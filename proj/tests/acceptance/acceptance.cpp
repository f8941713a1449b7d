// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "casimir/closedform.hpp"
#include "casimir/error.hpp"
#include "casimir/normalize.hpp"
#include "casimir/uea.hpp"
#include "casimir/verify.hpp"
#include "property/generators.hpp"

using namespace casimir;

namespace {

// All comparisons are exact; random points only feed rank computations.
constexpr std::uint64_t kSeed = 0;
constexpr std::uint64_t kSpecSeed = 2024;
constexpr int kRandomSpecs = 12;
constexpr int kPropertyCases = 100;
constexpr int kCasimirMaxN = 5;
constexpr int kCrossMaxN = 5;

struct Check {
  std::ostringstream log;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "  failed: " << what << '\n';
    }
  }
};

std::vector<InvariantExpression> as_expressions(const std::vector<RationalFunction>& fs) {
  std::vector<InvariantExpression> out;
  for (const auto& f : fs) out.push_back(InvariantExpression::rational(f));
  return out;
}

bool all_invariant(const LieAlgebra& L, const std::vector<InvariantExpression>& es) {
  for (const auto& e : es) {
    if (!is_invariant(L, e)) return false;
  }
  return true;
}

bool same_field(const LieAlgebra& L, const std::vector<InvariantExpression>& a,
                const std::vector<InvariantExpression>& b) {
  return a.size() == b.size() && same_invariant_field(a, b, L, kSeed) && same_invariant_field(b, a, L, kSeed);
}

std::vector<TriangularSpec> random_specs() {
  gen::Rng rng(kSpecSeed);
  std::vector<TriangularSpec> out;
  for (int t = 0; t < kRandomSpecs; ++t) {
    const int n = 4 + t % 3;
    const int s = 1 + (t / 3) % 3;
    out.push_back(gen::triangular_spec(rng, n, s));
  }
  return out;
}

std::string describe(const TriangularSpec& s) {
  std::string out = "n=" + std::to_string(s.n) + " gamma=";
  for (const auto& row : s.gamma) {
    out += "(";
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + to_string(row[i]);
    out += ")";
  }
  return out;
}

void criterion1(Check& c) {
  const LieAlgebra L = build_g48(Rational(-1));
  const std::vector<InvariantExpression> reference{parse_expression("x1"), parse_expression("x1*x4 - x2*x3")};
  const auto norm = as_expressions(normalize_algebra(L).basis);
  const auto closed = closed_form_basis(L);
  c.expect(norm.size() == 2 && closed.size() == 2, "g48(-1) basis size 2");
  c.expect(same_field(L, reference, norm), "normalize basis generates {x1, x1*x4 - x2*x3}");
  c.expect(same_field(L, reference, closed), "closed-form basis generates {x1, x1*x4 - x2*x3}");

  const auto s1 = symmetrize_invariant(reference[0], L);
  const auto s2 = symmetrize_invariant(reference[1], L);
  NCPolynomial expected = NCPolynomial(NCWord{0, 3});
  expected -= NCPolynomial(NCWord{1, 2}, Rational(1, 2));
  expected -= NCPolynomial(NCWord{2, 1}, Rational(1, 2));
  expected = nc_normalize(expected, L);
  c.expect(s1.numerator == NCPolynomial(NCWord{0}) && !s1.denominator, "Sym(x1) = e1");
  c.expect(s2.numerator == expected && !s2.denominator, "Sym(x1*x4 - x2*x3) = e1*e4 - (e2*e3 + e3*e2)/2");
  c.expect(is_casimir(s1.numerator, L) && is_casimir(s2.numerator, L), "both are Casimir operators");

  for (const Rational& b : {Rational(1, 2), Rational(2), Rational(0), Rational(-3, 2), Rational(5)}) {
    const LieAlgebra G = build_g48(b);
    c.expect(normalize_algebra(G).n_g == 0, "normalize N = 0 for b = " + to_string(b));
    c.expect(generic_invariant_count(G, kSeed) == 0, "generic count 0 for b = " + to_string(b));
  }
}

void criterion2(Check& c) {
  for (int n = 2; n <= 7; ++n) {
    const LieAlgebra L = build_t0(n);
    const auto basis = closed_form_basis(L);
    const std::string tag = "t0(" + std::to_string(n) + ")";
    c.expect(static_cast<int>(basis.size()) == n / 2, tag + " size [n/2]");
    c.expect(all_invariant(L, basis), tag + " invariant");
    c.expect(generic_invariant_count(L, kSeed) == n / 2, tag + " generic count");
    if (n <= kCasimirMaxN) {
      for (const auto& e : basis) {
        const auto s = symmetrize_invariant(e, L);
        c.expect(!s.denominator && is_casimir(s.numerator, L), tag + " Casimir " + e.to_string());
      }
    }
  }
}

void criterion3(Check& c) {
  for (int n = 3; n <= 6; ++n) {
    const LieAlgebra L = build_st(n);
    const auto basis = closed_form_basis(L);
    const std::string tag = "st(" + std::to_string(n) + ")";
    c.expect(static_cast<int>(basis.size()) == (n - 1) / 2, tag + " size [(n-1)/2]");
    c.expect(all_invariant(L, basis), tag + " invariant");
    c.expect(generic_invariant_count(L, kSeed) == (n - 1) / 2, tag + " generic count");
  }
}

void criterion4(Check& c) {
  for (int n = 2; n <= 6; ++n) {
    const LieAlgebra L = build_t(n);
    const auto basis = closed_form_basis(L);
    const std::string tag = "t(" + std::to_string(n) + ")";
    c.expect(static_cast<int>(basis.size()) == (n + 1) / 2, tag + " size [(n+1)/2]");
    RationalFunction trace;
    for (int i = 1; i <= n; ++i) trace += RationalFunction(Var::e(i, i));
    c.expect(!basis.empty() && basis[0].value() == trace, tag + " contains the trace");
    c.expect(all_invariant(L, basis), tag + " invariant");
  }
}

void criterion5(Check& c) {
  for (const auto& spec : random_specs()) {
    const LieAlgebra L = build_t_gamma(spec);
    const ReducedGamma r = reduce_gamma(spec);
    const auto basis = algebra_basis(spec, r);
    const std::string tag = describe(spec);
    c.expect(static_cast<int>(basis.size()) == spec.n / 2 + spec.s - 2 * r.s_prime, tag + " count");
    c.expect(all_invariant(L, basis), tag + " invariant");
    c.expect(functionally_independent(basis, L, kSeed), tag + " independent");
  }
}

void criterion6(Check& c) {
  std::vector<std::pair<std::string, LieAlgebra>> algebras{{"g48(-1)", build_g48(Rational(-1))}};
  for (int n = 2; n <= kCrossMaxN; ++n) algebras.emplace_back("t0(" + std::to_string(n) + ")", build_t0(n));
  for (int n = 3; n <= kCrossMaxN; ++n) algebras.emplace_back("st(" + std::to_string(n) + ")", build_st(n));
  for (int n = 2; n <= kCrossMaxN; ++n) algebras.emplace_back("t(" + std::to_string(n) + ")", build_t(n));
  for (const auto& spec : random_specs()) {
    if (spec.n <= kCrossMaxN) algebras.emplace_back(describe(spec), build_t_gamma(spec));
  }
  for (const auto& [tag, L] : algebras) {
    const auto norm = as_expressions(normalize_algebra(L).basis);
    const auto closed = closed_form_basis(L);
    c.expect(same_field(L, norm, closed), tag + " same invariant field");
  }
}

void criterion7(Check& c) {
  for (const auto& spec : random_specs()) {
    const ReducedGamma r = reduce_gamma(spec);
    const std::string tag = describe(spec);
    c.expect(check_reduced_form(spec.n, r).empty(), tag + " reduced-form predicate");
    QMatrix d(static_cast<std::size_t>(spec.s), static_cast<std::size_t>(spec.n / 2));
    for (int p = 1; p <= spec.s; ++p) {
      for (int k = 1; k <= spec.n / 2; ++k) d(p - 1, k - 1) = spec.g(p, spec.n - k + 1) - spec.g(p, k);
    }
    c.expect(r.s_prime == static_cast<int>(rank(d)), tag + " s' = rank");
  }
}

void criterion8(Check& c) {
  gen::Rng rng(kSeed + 8);
  int failures = 0;
  for (int t = 0; t < kPropertyCases; ++t) {
    const Polynomial a = gen::polynomial(rng), b = gen::polynomial(rng), d = gen::polynomial(rng);
    if (a * (b + d) != a * b + a * d || (a * b) * d != a * (b * d) || a + b != b + a) ++failures;
    const RationalFunction f = gen::rational_function(rng), g = gen::rational_function(rng);
    if ((f - g) + g != f || f * g != g * f) ++failures;
  }
  c.expect(failures == 0, "ring axioms");

  failures = 0;
  for (int t = 0; t < kPropertyCases; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen::integer(rng, 2, 4));
    const SymMatrix a = gen::polynomial_matrix(rng, n), b = gen::polynomial_matrix(rng, n);
    if (determinant(a * b) != determinant(a) * determinant(b)) ++failures;
  }
  c.expect(failures == 0, "determinant multiplicativity");

  failures = 0;
  for (int t = 0; t < kPropertyCases; ++t) {
    const std::size_t n = static_cast<std::size_t>(gen::integer(rng, 1, 5));
    const SymMatrix b = gen::upper_triangular(rng, n);
    if (b * invert_upper_triangular(b) != SymMatrix::identity(n)) ++failures;
  }
  c.expect(failures == 0, "triangular inverse");

  failures = 0;
  const std::vector<LieAlgebra> algebras{build_t0(4), build_st(3), build_g48(Rational(1, 2)), build_t(3)};
  for (int t = 0; t < kPropertyCases; ++t) {
    const LieAlgebra& L = algebras[static_cast<std::size_t>(t) % algebras.size()];
    const NCWord w = gen::word(rng, L.dim(), 5);
    if (nc_normalize(w, L, &rng) != nc_normalize(w, L)) ++failures;
  }
  c.expect(failures == 0, "PBW confluence");

  failures = 0;
  const Rational h(1, 100000000), tol(1, 10000);
  for (int t = 0, done = 0; done < kPropertyCases && t < 10 * kPropertyCases; ++t) {
    const RationalFunction f = gen::rational_function(rng);
    const Var v = Var::xg(1);
    std::unordered_map<Var, Rational> p;
    for (unsigned k = 1; k <= 3; ++k) p[Var::xg(k)] = gen::rational(rng, 5);
    auto q = p;
    q[v] += h;
    try {
      const Rational exact = f.derivative(v).evaluate(p);
      const Rational fd = (f.evaluate(q) - f.evaluate(p)) / h;
      if (abs(fd - exact) > tol * (1 + abs(exact))) ++failures;
      ++done;
    } catch (const Error&) {
    }
  }
  c.expect(failures == 0, "derivative vs finite difference");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"g4.8 reproduction", criterion1},
      {"t0(n) Casimir operators, n = 2..7", criterion2},
      {"st(n) rational invariants, n = 3..6", criterion3},
      {"t(n) invariants with the trace, n = 2..6", criterion4},
      {"randomized t_gamma specs: count, invariance, independence", criterion5},
      {"normalize and closed form generate the same field", criterion6},
      {"reduced form of gamma and s' = rank", criterion7},
      {"property suites", criterion8},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(c);
    } catch (const Error& e) {
      c.ok = false;
      c.log << "  error " << e.name() << ": " << e.what() << '\n';
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ("
              << secs << " s)\n"
              << c.log.str();
    if (!c.ok) ++failed;
  }
  return failed;
}
