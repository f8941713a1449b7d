#include "casimir/verify.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include <json.hpp>

#include "casimir/closedform.hpp"
#include "casimir/error.hpp"
#include "casimir/matrix.hpp"

namespace casimir {

namespace {

using Point = std::unordered_map<Var, Rational>;

constexpr int kRange = 20;
constexpr int kRetries = 25;
constexpr int kPoints = 3;

struct Field {
  std::vector<std::pair<Var, Polynomial>> terms;  // coefficient of d/dx_j
};

Field vector_field(const LieAlgebra& L, std::size_t i) {
  if (i >= L.dim()) fail(ErrorKind::IndexError, "generator index out of range");
  Field f;
  for (std::size_t j = 0; j < L.dim(); ++j) {
    Polynomial c;
    for (const auto& [k, v] : L.bracket(i, j)) c += Polynomial(L.coordinate(k)) * v;
    if (!c.is_zero()) f.terms.emplace_back(L.coordinate(j), std::move(c));
  }
  return f;
}

Polynomial apply(const Field& f, const Polynomial& p) {
  Polynomial out;
  for (const auto& [x, c] : f.terms) {
    if (p.contains(x)) out += c * p.derivative(x);
  }
  return out;
}

RationalFunction in_coordinates(const LieAlgebra& L, const RationalFunction& F) {
  std::map<Var, Var> m;
  for (Var v : F.variables()) {
    if (v.is_parameter()) fail(ErrorKind::DomainError, "expression contains parameter " + v.name());
    Var c = v;
    if (v.is_element()) c = *element_to_coordinate(v);
    if (!L.index_of(c)) fail(ErrorKind::DomainError, v.name() + " is not a coordinate of the algebra");
    if (c != v) m[v] = c;
  }
  return m.empty() ? F : F.rename(m);
}

std::vector<PowerProduct::Factor> coordinate_factors(const LieAlgebra& L, const InvariantExpression& F) {
  std::vector<PowerProduct::Factor> out;
  for (const auto& [f, r] : F.factors()) out.emplace_back(in_coordinates(L, f), r);
  return out;
}

// X(N/D) = (XN D - N XD) / D^2
RationalFunction apply_rational(const Field& f, const RationalFunction& F) {
  const Polynomial& N = F.numerator();
  const Polynomial& D = F.denominator();
  if (D.is_constant()) return RationalFunction(apply(f, N)) / RationalFunction(D);
  return RationalFunction(apply(f, N) * D - N * apply(f, D), D * D);
}

RationalFunction residual(const Field& f, const std::vector<PowerProduct::Factor>& fs, bool log_form) {
  if (!log_form) return apply_rational(f, fs.front().first);
  RationalFunction out;
  for (const auto& [F, r] : fs) {
    const RationalFunction x = apply_rational(f, F);
    if (!x.is_zero()) out += x / F * RationalFunction(r);
  }
  return out;
}

bool log_form(const InvariantExpression& F) { return F.kind() == InvariantExpression::Kind::PowerProduct; }

Point random_point(const LieAlgebra& L, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-kRange, kRange);
  Point p;
  for (Var v : L.coordinates()) p[v] = Rational(dist(rng));
  return p;
}

// Gradient row of F at a point, or nullopt when the point is not admissible.
std::optional<std::vector<Rational>> gradient_row(const std::vector<PowerProduct::Factor>& fs, bool log_rows,
                                                  const Point& p, const std::vector<Var>& vars) {
  std::vector<Rational> row(vars.size());
  for (const auto& [F, r] : fs) {
    auto [n, dn] = F.numerator().evaluate_with_gradient(p, vars);
    auto [d, dd] = F.denominator().evaluate_with_gradient(p, vars);
    if (d == 0 || (log_rows && n == 0)) return std::nullopt;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (log_rows) {
        row[j] += r * (dn[j] / n - dd[j] / d);
      } else {
        row[j] += (dn[j] * d - n * dd[j]) / (d * d);
      }
    }
  }
  return row;
}

}  // namespace

RationalFunction infinitesimal_apply(const LieAlgebra& L, std::size_t i, const RationalFunction& F) {
  return apply_rational(vector_field(L, i), in_coordinates(L, F));
}

RationalFunction invariance_residual(const LieAlgebra& L, std::size_t i, const InvariantExpression& F) {
  return residual(vector_field(L, i), coordinate_factors(L, F), log_form(F));
}

bool is_invariant(const LieAlgebra& L, const InvariantExpression& F) {
  const auto fs = coordinate_factors(L, F);
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Field f = vector_field(L, i);
    if (!log_form(F)) {
      const auto& G = fs.front().first;
      const Polynomial& N = G.numerator();
      const Polynomial& D = G.denominator();
      const Polynomial top = D.is_constant() ? apply(f, N) : apply(f, N) * D - N * apply(f, D);
      if (!top.is_zero()) return false;
    } else if (!residual(f, fs, true).is_zero()) {
      return false;
    }
  }
  return true;
}

int generic_invariant_count(const LieAlgebra& L, std::uint64_t seed) {
  const std::size_t n = L.dim();
  if (n == 0) return 0;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<std::size_t> ranks;
    for (int t = 0; t < kPoints; ++t) {
      std::uniform_int_distribution<int> dist(-kRange, kRange);
      std::vector<Rational> x(n);
      for (auto& v : x) v = dist(rng);
      QMatrix M(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (const auto& [k, c] : L.bracket(i, j)) M(i, j) += c * x[k];
        }
      }
      ranks.push_back(rank(M));
    }
    if (std::all_of(ranks.begin(), ranks.end(), [&](std::size_t r) { return r == ranks.front(); })) {
      return static_cast<int>(n - ranks.front());
    }
  }
  fail(ErrorKind::Inconclusive, "rank of the commutator matrix is unstable across random points");
}

std::size_t jacobian_rank(const std::vector<InvariantExpression>& Fs, const LieAlgebra& L, std::uint64_t seed) {
  if (Fs.empty()) return 0;
  std::vector<std::vector<PowerProduct::Factor>> factors;
  for (const auto& F : Fs) factors.push_back(coordinate_factors(L, F));
  const std::vector<Var>& vars = L.coordinates();
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  int found = 0;
  for (int attempt = 0; attempt < kRetries * kPoints && found < kPoints; ++attempt) {
    const Point p = random_point(L, rng);
    QMatrix J(Fs.size(), vars.size());
    bool ok = true;
    for (std::size_t r = 0; r < Fs.size() && ok; ++r) {
      auto row = gradient_row(factors[r], log_form(Fs[r]), p, vars);
      if (!row) {
        ok = false;
        break;
      }
      for (std::size_t c = 0; c < vars.size(); ++c) J(r, c) = (*row)[c];
    }
    if (!ok) continue;
    ++found;
    best = std::max(best, rank(J));
  }
  if (found == 0) fail(ErrorKind::Inconclusive, "no admissible point found for the Jacobian");
  return best;
}

bool functionally_independent(const std::vector<InvariantExpression>& Fs, const LieAlgebra& L, std::uint64_t seed) {
  return jacobian_rank(Fs, L, seed) == Fs.size();
}

bool same_invariant_field(const std::vector<InvariantExpression>& base,
                          const std::vector<InvariantExpression>& extra, const LieAlgebra& L, std::uint64_t seed) {
  std::vector<InvariantExpression> all = base;
  all.insert(all.end(), extra.begin(), extra.end());
  return jacobian_rank(all, L, seed) == jacobian_rank(base, L, seed);
}

std::vector<ExpressionVerdict> verify_expressions(const LieAlgebra& L, const std::vector<InvariantExpression>& Fs) {
  std::vector<ExpressionVerdict> out;
  for (const auto& F : Fs) {
    ExpressionVerdict v;
    v.expression = F.to_string();
    const auto fs = coordinate_factors(L, F);
    for (std::size_t i = 0; i < L.dim(); ++i) {
      const RationalFunction r = residual(vector_field(L, i), fs, log_form(F));
      if (!r.is_zero()) v.invariant = false;
      v.residuals.push_back(r.to_string());
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string verdicts_to_json(const LieAlgebra& L, const std::vector<ExpressionVerdict>& verdicts) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t i = 0; i < v.residuals.size(); ++i) {
      gens.push_back({{"generator", L.labels()[i]}, {"residual", v.residuals[i]}, {"zero", v.residuals[i] == "0"}});
    }
    j.push_back({{"expression", v.expression}, {"invariant", v.invariant}, {"generators", gens}});
  }
  return j.dump(2);
}

}  // namespace casimir
