#include "casimir/normalize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "casimir/error.hpp"

namespace casimir {

namespace {

bool is_param(Var v) { return v.is_parameter(); }
bool has_params(const RationalFunction& f) { return f.any_variable(is_param); }
bool has_params(const Polynomial& p) { return p.any_variable(is_param); }

Monomial restrict(const Monomial& m, bool (*pred)(Var)) {
  std::vector<Monomial::Factor> out;
  for (const auto& f : m.factors()) {
    if (pred(f.first)) out.push_back(f);
  }
  return Monomial(std::move(out));
}

// f = (pn / pd) * free with pn, pd parameter monomials and free parameter-free.
struct MonomialSplit {
  Monomial num_params;
  Monomial den_params;
  RationalFunction free;
};

std::optional<MonomialSplit> split_parameter_monomial(const RationalFunction& f) {
  const Monomial pn = restrict(f.numerator().monomial_content(), is_param);
  const Monomial pd = restrict(f.denominator().monomial_content(), is_param);
  Polynomial n = f.numerator().divide_monomial(pn);
  Polynomial d = f.denominator().divide_monomial(pd);
  if (has_params(n) || has_params(d)) return std::nullopt;
  return MonomialSplit{pn, pd, RationalFunction(std::move(n), std::move(d))};
}

bool only_exp(const Monomial& m) {
  return std::all_of(m.factors().begin(), m.factors().end(),
                     [](const Monomial::Factor& f) { return f.first.is_exp_parameter(); });
}

// Entry is (exponential-parameter Laurent monomial) x (parameter-free factor).
bool is_multiplicative(const RationalFunction& f) {
  if (!has_params(f)) return false;
  auto s = split_parameter_monomial(f);
  return s && only_exp(s->num_params) && only_exp(s->den_params);
}

// c = 1 for a parameter-monomial multiple of a free factor, else 0.
Rational constant_for(const RationalFunction& f) {
  auto s = split_parameter_monomial(f);
  if (s && (!s->num_params.is_one() || !s->den_params.is_one())) return Rational(1);
  return Rational(0);
}

struct Candidate {
  std::size_t entry;
  Var param;
  Rational constant;
  RationalFunction solution;
  std::size_t size;
};

std::vector<Candidate> linear_candidates(const RationalFunction& f, std::size_t entry, const Rational& c) {
  std::vector<Candidate> out;
  const RationalFunction eq = c == 0 ? f : f - RationalFunction(c);
  if (eq.is_zero()) return out;
  Polynomial n = eq.numerator();
  n = n.divide_monomial(n.monomial_content());
  for (Var v : n.variables()) {
    if (!v.is_parameter() || n.degree_in(v) != 1) continue;
    const Polynomial a = n.coefficient_of(v, 1);
    const Polynomial b = n.coefficient_of(v, 0);
    if (a.is_zero()) continue;
    RationalFunction sol(-b, a);
    if (sol.contains(v)) continue;
    const std::size_t size = sol.numerator().size() + sol.denominator().size();
    out.push_back({entry, v, c, std::move(sol), size});
  }
  return out;
}

bool better(const Candidate& a, const Candidate& b) {
  if (a.size != b.size) return a.size < b.size;
  if (a.param != b.param) return a.param < b.param;
  return a.entry < b.entry;
}

std::optional<Candidate> pick(std::vector<Candidate> cands) {
  std::optional<Candidate> best;
  bool have_plain = std::any_of(cands.begin(), cands.end(),
                                [](const Candidate& c) { return !c.param.is_exp_parameter(); });
  for (auto& c : cands) {
    if (have_plain && c.param.is_exp_parameter()) continue;
    if (!best || better(c, *best)) best = std::move(c);
  }
  return best;
}

struct Entry {
  std::string label;
  RationalFunction value;
  bool alive = true;
};

std::string truncate(std::string s) {
  if (s.size() > 160) s = s.substr(0, 157) + "...";
  return s;
}

}  // namespace

NormalizationResult normalize(const LiftedInvariantSet& lifted, const std::vector<Hint>& hints) {
  NormalizationResult result;
  std::vector<Entry> entries;
  for (std::size_t k = 0; k < lifted.entries.size(); ++k) {
    entries.push_back({lifted.labels[k], lifted.entries[k], true});
  }
  auto find = [&](const std::string& label) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (entries[k].label == label && entries[k].alive) return k;
    }
    return std::nullopt;
  };
  auto apply = [&](const Candidate& c, const std::string& how) {
    entries[c.entry].alive = false;
    std::map<Var, RationalFunction> binding{{c.param, c.solution}};
    for (auto& e : entries) {
      if (e.alive && e.value.contains(c.param)) e.value = e.value.substitute(binding);
    }
    ++result.rho;
    result.trace.push_back(how + ": " + entries[c.entry].label + " = " + to_string(c.constant) +
                           " solved for " + c.param.name() + " = " +
                           truncate(c.solution.to_string()));
  };

  std::deque<std::string> zero_hints;
  for (const auto& h : hints) {
    if (h.kind == Hint::Kind::Zero && !h.labels.empty()) zero_hints.push_back(h.labels.front());
  }

  // Additive phase.
  for (;;) {
    bool progressed = false;
    for (auto it = zero_hints.begin(); it != zero_hints.end(); ++it) {
      auto k = find(*it);
      if (!k || !has_params(entries[*k].value)) {
        result.trace.push_back("hint " + *it + " skipped: entry is parameter-free or already used");
        zero_hints.erase(it);
        progressed = true;
        break;
      }
      auto best = pick(linear_candidates(entries[*k].value, *k, Rational(0)));
      if (!best) continue;
      apply(*best, "hint");
      zero_hints.erase(it);
      progressed = true;
      break;
    }
    if (progressed) continue;
    std::vector<Candidate> cands;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& e = entries[k];
      if (!e.alive || !has_params(e.value) || is_multiplicative(e.value)) continue;
      auto found = linear_candidates(e.value, k, constant_for(e.value));
      cands.insert(cands.end(), found.begin(), found.end());
    }
    auto best = pick(std::move(cands));
    if (!best) break;
    apply(*best, "greedy");
  }
  for (const auto& h : zero_hints) result.trace.push_back("hint " + h + " not used");

  // Prefix products along chains.
  for (const auto& h : hints) {
    if (h.kind != Hint::Kind::Chain) continue;
    std::vector<std::size_t> idx;
    for (const auto& l : h.labels) {
      if (auto k = find(l)) idx.push_back(*k);
    }
    if (idx.size() != h.labels.size()) {
      result.trace.push_back("chain skipped: some entries were normalized");
      continue;
    }
    RationalFunction acc(1L);
    for (std::size_t c = 0; c < idx.size(); ++c) {
      acc *= entries[idx[c]].value;
      entries[idx[c]].value = acc;
      entries[idx[c]].label = "Ihat[" + std::to_string(c + 1) + "]";
    }
    result.trace.push_back("chain: " + std::to_string(idx.size()) + " entries replaced by prefix products");
  }

  // Multiplicative phase.
  std::vector<std::size_t> mult;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    if (!e.alive || !has_params(e.value)) continue;
    if (!is_multiplicative(e.value)) {
      std::string residual;
      for (const auto& r : entries) {
        if (r.alive && has_params(r.value)) residual += "\n  " + r.label + " = " + truncate(r.value.to_string());
      }
      fail(ErrorKind::NormalizationStuck, "no parameter can be eliminated linearly; residual entries:" + residual);
    }
    mult.push_back(k);
  }
  std::vector<std::size_t> order;
  for (const auto& h : hints) {
    if (h.kind != Hint::Kind::Unit || h.labels.empty()) continue;
    if (auto k = find(h.labels.front())) {
      if (std::find(mult.begin(), mult.end(), *k) != mult.end() &&
          std::find(order.begin(), order.end(), *k) == order.end()) {
        order.push_back(*k);
      }
    }
  }
  for (auto k : mult) {
    if (std::find(order.begin(), order.end(), k) == order.end()) order.push_back(k);
  }

  std::vector<Var> exp_vars;
  std::map<std::size_t, MonomialSplit> splits;
  for (auto k : order) {
    auto s = *split_parameter_monomial(entries[k].value);
    for (const auto& f : s.num_params.factors()) exp_vars.push_back(f.first);
    for (const auto& f : s.den_params.factors()) exp_vars.push_back(f.first);
    splits.emplace(k, std::move(s));
  }
  std::sort(exp_vars.begin(), exp_vars.end());
  exp_vars.erase(std::unique(exp_vars.begin(), exp_vars.end()), exp_vars.end());
  auto exponents = [&](std::size_t k) {
    std::vector<Rational> row;
    for (Var v : exp_vars) {
      row.emplace_back(splits.at(k).num_params.degree_in(v) - splits.at(k).den_params.degree_in(v));
    }
    return row;
  };

  std::vector<std::size_t> pivots;
  std::map<std::size_t, std::vector<Rational>> weights;  // non-pivot entry -> weights on pivots
  for (auto k : order) {
    const auto row = exponents(k);
    // Solve row = sum_i w_i pivot_i; columns of the system are pivot rows.
    QMatrix sys(exp_vars.size(), pivots.size() + 1);
    for (std::size_t v = 0; v < exp_vars.size(); ++v) {
      for (std::size_t i = 0; i < pivots.size(); ++i) sys(v, i) = exponents(pivots[i])[v];
      sys(v, pivots.size()) = row[v];
    }
    const auto piv = row_reduce(sys);
    if (!piv.empty() && piv.back() == pivots.size()) {
      pivots.push_back(k);
      result.trace.push_back("unit: " + entries[k].label + " = 1 normalizes an exponential parameter");
      continue;
    }
    std::vector<Rational> w(pivots.size(), Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) w[piv[r]] = sys(r, pivots.size());
    weights.emplace(k, std::move(w));
  }
  result.rho += static_cast<int>(pivots.size());

  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    if (!e.alive) continue;
    if (!has_params(e.value)) {
      if (e.value.is_constant()) {
        fail(ErrorKind::NormalizationStuck, "entry " + e.label + " reduced to a constant");
      }
      result.basis.push_back(e.value);
      result.basis_labels.push_back(e.label);
      continue;
    }
    auto it = weights.find(k);
    if (it == weights.end()) continue;
    Integer d = 1;
    for (const auto& w : it->second) d = lcm(d, w.get_den());
    Integer g = d;
    for (const auto& w : it->second) g = gcd(g, Integer(w * d));
    d /= g;
    RationalFunction inv = splits.at(k).free.pow(d.get_si());
    std::string label = e.label;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Rational ex = -it->second[i] * d;
      if (ex == 0) continue;
      inv *= splits.at(pivots[i]).free.pow(to_long(ex));
      label += "*" + entries[pivots[i]].label + "^(" + to_string(ex) + ")";
    }
    if (d != 1) label = "(" + e.label + ")^" + d.get_str() + label.substr(e.label.size());
    result.basis.push_back(std::move(inv));
    result.basis_labels.push_back(label);
  }
  result.n_g = static_cast<int>(lifted.entries.size()) - result.rho;
  if (result.n_g != static_cast<int>(result.basis.size())) {
    fail(ErrorKind::NormalizationStuck, "basis size differs from dim - rank");
  }
  return result;
}

std::vector<Hint> triangular_hints(const TriangularSpec& spec, const ReducedGamma& reduced) {
  const int n = spec.n;
  auto label = [](int i, int j) { return "I[" + std::to_string(i) + "," + std::to_string(j) + "]"; };
  std::vector<Hint> out;
  for (int k = 1; k <= (n + 1) / 2; ++k) {
    const int kappa = n - k + 1;
    for (int j = 1; j < k; ++j) out.push_back({Hint::Kind::Zero, {label(kappa, j)}});
    for (int j = k + 1; j < kappa; ++j) out.push_back({Hint::Kind::Zero, {label(kappa, j)}});
    if (k < kappa) {
      for (int j = 1; j < k; ++j) out.push_back({Hint::Kind::Zero, {label(k, j)}});
    }
  }
  Hint chain{Hint::Kind::Chain, {}};
  for (int k = 1; k <= n / 2; ++k) chain.labels.push_back(label(n - k + 1, k));
  out.push_back(chain);
  for (int kq : reduced.k_list) out.push_back({Hint::Kind::Unit, {"Ihat[" + std::to_string(kq) + "]"}});
  for (int q = 1; q <= reduced.s_prime; ++q) out.push_back({Hint::Kind::Zero, {label(q, 0)}});
  return out;
}

NormalizationResult normalize_algebra(const LieAlgebra& L) {
  const auto& fam = L.family();
  if (!fam || (fam->family != "t0" && fam->family != "st" && fam->family != "t_gamma")) {
    return normalize(lifted_generic(L));
  }
  const TriangularSpec& spec = fam->spec;
  const ReducedGamma reduced = reduce_gamma(spec);
  const TriangularSpec rspec = reduced.reduced_spec(spec.n);
  NormalizationResult r = normalize(lifted_triangular(rspec), triangular_hints(rspec, reduced));
  // Coordinates of the reduced basis: x'[q,0] = sum_p lambda_qp x[p,0].
  std::map<Var, RationalFunction> back;
  for (int q = 0; q < spec.s; ++q) {
    RationalFunction v;
    for (int p = 0; p < spec.s; ++p) {
      const Rational& c = reduced.row_transform(q, p);
      if (c != 0) v += RationalFunction(c) * RationalFunction(Var::x0(p + 1));
    }
    back.emplace(Var::x0(q + 1), v);
  }
  for (auto& f : r.basis) f = f.substitute(back);
  return r;
}

}  // namespace casimir
