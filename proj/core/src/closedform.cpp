#include "casimir/closedform.hpp"

#include <map>

#include "casimir/coadjoint.hpp"
#include "casimir/error.hpp"

namespace casimir {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }

void check_block(int n, int k) {
  if (k < 1 || k > n / 2) fail(ErrorKind::IndexError, "block size k out of range");
}

InvariantExpression rational_or_product(const std::vector<PowerProduct::Factor>& fs) {
  if (fs.size() == 1 && fs[0].second == 1) return InvariantExpression::rational(fs[0].first);
  return InvariantExpression::power_product(PowerProduct(fs));
}

SymMatrix lower_with_diagonal(int n) {
  SymMatrix X(idx(n + 1), idx(n + 1));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) X(idx(i), idx(j)) = RationalFunction(Var::x(i, j));
  }
  return X;
}

std::map<Var, Var> renaming(const InvariantExpression& e, bool to_elements) {
  std::set<Var> vars;
  for (const auto& [f, r] : e.factors()) {
    auto vs = f.variables();
    vars.insert(vs.begin(), vs.end());
  }
  if (e.kind() == InvariantExpression::Kind::Affine) {
    auto vs = e.lead().variables();
    vars.insert(vs.begin(), vs.end());
  }
  std::map<Var, Var> m;
  for (Var v : vars) {
    auto w = to_elements ? coordinate_to_element(v) : element_to_coordinate(v);
    if (w) m[v] = *w;
  }
  return m;
}

}  // namespace

RationalFunction corner_minor(const SymMatrix& X, int k) {
  const int n = static_cast<int>(X.rows());
  check_block(n, k);
  const int kappa = n - k + 1;
  SymMatrix m(idx(k + 1), idx(k + 1));
  for (int r = kappa; r <= n; ++r) {
    for (int c = 1; c <= k; ++c) m(idx(r - kappa + 1), idx(c)) = X(idx(r), idx(c));
  }
  return determinant(m);
}

RationalFunction bordered_det_x(const SymMatrix& X, int i, int k) {
  const int n = static_cast<int>(X.rows());
  check_block(n, k);
  const int kappa = n - k + 1;
  if (i <= k || i >= kappa) fail(ErrorKind::IndexError, "border row i out of range");
  SymMatrix m(idx(k + 2), idx(k + 2));
  for (int c = 1; c <= k; ++c) m(0, idx(c)) = X(idx(i), idx(c));
  for (int r = kappa; r <= n; ++r) {
    const std::size_t row = idx(r - kappa + 2);
    for (int c = 1; c <= k; ++c) m(row, idx(c)) = X(idx(r), idx(c));
    m(row, idx(k + 1)) = X(idx(r), idx(i));
  }
  return determinant(m);
}

std::vector<RationalFunction> relative_invariants(const TriangularSpec& spec) {
  spec.validate();
  const SymMatrix X = coordinate_matrix(spec.n);
  std::vector<RationalFunction> out;
  for (int k = 1; k <= spec.n / 2; ++k) out.push_back(corner_minor(X, k));
  return out;
}

std::vector<InvariantExpression> coadjoint_basis(const TriangularSpec& spec, const ReducedGamma& reduced) {
  spec.validate();
  const int n = spec.n;
  const int half = n / 2;
  const auto& g = reduced.gamma_reduced;
  if (static_cast<int>(g.size()) != spec.s) fail(ErrorKind::SpecError, "reduced gamma has the wrong number of rows");
  const std::string bad = check_reduced_form(n, reduced);
  if (!bad.empty()) fail(ErrorKind::SpecError, "gamma is not reduced: " + bad);

  const SymMatrix X = coordinate_matrix(n);
  std::vector<RationalFunction> minors;
  for (int k = 1; k <= half; ++k) minors.push_back(corner_minor(X, k));

  std::vector<InvariantExpression> out;
  for (int k = 1; k <= half; ++k) {
    bool pivot = false;
    for (int kq : reduced.k_list) pivot = pivot || kq == k;
    if (pivot) continue;
    std::vector<PowerProduct::Factor> fs{{minors[idx(k)], Rational(1)}};
    for (int q = 0; q < reduced.s_prime; ++q) {
      const Rational& b = reduced.beta[static_cast<std::size_t>(q)][idx(k)];
      if (b != 0) fs.emplace_back(minors[idx(reduced.k_list[static_cast<std::size_t>(q)])], b);
    }
    out.push_back(rational_or_product(fs));
  }

  std::vector<RationalFunction> sums;
  for (int k = 1; k <= half; ++k) {
    RationalFunction sum;
    for (int i = k + 1; i < n - k + 1; ++i) sum += bordered_det_x(X, i, k);
    sums.push_back(sum / minors[idx(k)]);
  }
  for (int p = reduced.s_prime + 1; p <= spec.s; ++p) {
    const auto& row = g[idx(p)];
    Rational sign = 1;
    for (int q = 1; q <= spec.s; ++q) {
      const Rational& l = reduced.row_transform(idx(p), idx(q));
      if (l != 0) {
        sign = l < 0 ? -1 : 1;
        break;
      }
    }
    Polynomial lead;
    for (int q = 1; q <= spec.s; ++q) {
      const Rational l = sign * reduced.row_transform(idx(p), idx(q));
      if (l != 0) lead += Polynomial(Var::x0(static_cast<unsigned>(q))) * l;
    }
    RationalFunction rest;
    for (int k = 1; k <= half; ++k) {
      const Rational c = sign * (k % 2 == 1 ? 1 : -1) * (row[idx(k)] - row[idx(k + 1)]);
      if (c != 0) rest += sums[idx(k)] * RationalFunction(c);
    }
    out.push_back(InvariantExpression::affine(std::move(lead), std::move(rest)));
  }
  return out;
}

std::vector<InvariantExpression> algebra_basis(const TriangularSpec& spec, const ReducedGamma& reduced) {
  std::vector<InvariantExpression> out;
  for (const auto& e : coadjoint_basis(spec, reduced)) out.push_back(to_elements(e));
  return out;
}

std::vector<InvariantExpression> st_basis(int n) {
  if (n < 2) fail(ErrorKind::SpecError, "n must be at least 2");
  const SymMatrix X = coordinate_matrix(n);
  std::vector<InvariantExpression> out;
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    RationalFunction sum;
    for (int j = k + 1; j <= n - k; ++j) sum += bordered_det_x(X, j, k);
    sum = sum / corner_minor(X, k);
    if (k % 2 == 0) sum = -sum;
    Polynomial lead = Polynomial(Var::x0(static_cast<unsigned>(k))) -
                      Polynomial(Var::x0(static_cast<unsigned>(n - k)));
    out.push_back(to_elements(InvariantExpression::affine(std::move(lead), std::move(sum))));
  }
  return out;
}

std::vector<InvariantExpression> t_basis(int n) {
  if (n < 2) fail(ErrorKind::SpecError, "n must be at least 2");
  const SymMatrix X = lower_with_diagonal(n);
  std::vector<InvariantExpression> out;
  RationalFunction trace;
  for (int i = 1; i <= n; ++i) trace += X(idx(i), idx(i));
  out.push_back(to_elements(InvariantExpression::rational(trace)));
  for (int k = 1; k <= (n - 1) / 2; ++k) {
    const int kappa = n - k + 1;
    RationalFunction sum;
    for (int j = k + 1; j <= n - k; ++j) {
      SymMatrix m(idx(k + 2), idx(k + 2));
      for (int c = 1; c <= k; ++c) m(0, idx(c)) = X(idx(j), idx(c));
      m(0, idx(k + 1)) = X(idx(j), idx(j));
      for (int r = kappa; r <= n; ++r) {
        const std::size_t row = idx(r - kappa + 2);
        for (int c = 1; c <= k; ++c) m(row, idx(c)) = X(idx(r), idx(c));
        m(row, idx(k + 1)) = X(idx(r), idx(j));
      }
      sum += determinant(m);
    }
    out.push_back(to_elements(InvariantExpression::rational(sum / corner_minor(X, k))));
  }
  return out;
}

bool has_rational_basis(const ReducedGamma& reduced) {
  for (const auto& row : reduced.beta) {
    for (const auto& b : row) {
      if (b.get_den() == 0) return false;
    }
  }
  return true;
}

std::vector<InvariantExpression> closed_form_basis(const LieAlgebra& L) {
  const auto& tag = L.family();
  if (!tag) fail(ErrorKind::SpecError, "closed form needs a family algebra; use --method normalize");
  if (tag->family == "t") return t_basis(tag->n);
  if (tag->family == "st") return st_basis(tag->n);
  if (tag->family == "t0" || tag->family == "t_gamma") return algebra_basis(tag->spec, reduce_gamma(tag->spec));
  if (tag->family == "g48") {
    const std::map<Var, Var> m{{Var::e(1, 3), Var::eg(1)},
                               {Var::e(1, 2), Var::eg(2)},
                               {Var::e(2, 3), Var::eg(3)},
                               {Var::f(1), Var::eg(4)}};
    std::vector<InvariantExpression> out;
    for (const auto& e : algebra_basis(tag->spec, reduce_gamma(tag->spec))) out.push_back(e.rename(m));
    return out;
  }
  fail(ErrorKind::SpecError, "no closed form for family '" + tag->family + "'");
}

InvariantExpression to_coordinates(const InvariantExpression& e) { return e.rename(renaming(e, false)); }
InvariantExpression to_elements(const InvariantExpression& e) { return e.rename(renaming(e, true)); }

}  // namespace casimir
