#include "casimir/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, int exponent) {
  if (exponent != 0) {
    factors_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.second == 0; });
  for (const auto& f : factors_) degree_ += f.second;
}

int Monomial::degree_in(Var v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
    if (v < w) break;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial out;
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    int sub = 0;
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it != other.factors_.end() && it->first == v) sub = it->second;
    if (e - sub != 0) out.factors_.emplace_back(v, e - sub);
  }
  out.degree_ = degree_ - other.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out;
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it != other.factors_.end() && it->first == v) {
      const int m = std::min(e, it->second);
      out.factors_.emplace_back(v, m);
      out.degree_ += m;
    }
  }
  return out;
}

Monomial Monomial::without(Var v) const {
  Monomial out = *this;
  auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                         [v](const Factor& f) { return f.first == v; });
  if (it != out.factors_.end()) {
    out.degree_ -= it->second;
    out.factors_.erase(it);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [va, ea] = a.factors_[k];
    const auto& [vb, eb] = b.factors_[k];
    if (va != vb) return va < vb ? std::strong_ordering::greater : std::strong_ordering::less;
    if (ea != eb) return ea <=> eb;
  }
  return a.factors_.size() <=> b.factors_.size();
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& [v, e] : factors_) {
    h ^= (static_cast<std::size_t>(v.id()) * 31u + static_cast<std::size_t>(e)) + 0x9e3779b9 +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Polynomial::Polynomial(Var v) { terms_.push_back({Monomial(v), Rational(1)}); }

Polynomial::Polynomial(Monomial m, Rational c) {
  if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize_terms();
  return p;
}

void Polynomial::normalize_terms() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Rational(0);
}

int Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

int Polynomial::degree_in(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree_in(v));
  return d;
}

std::set<Var> Polynomial::variables() const {
  std::set<Var> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) out.insert(f.first);
  }
  return out;
}

bool Polynomial::any_variable(const std::function<bool(Var)>& pred) const {
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) {
      if (pred(f.first)) return true;
    }
  }
  return false;
}

Polynomial Polynomial::coefficient_of(Var v, int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial.degree_in(v) == d) out.push_back({t.monomial.without(v), t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

// Merges two descending term lists, adding `sign` times the second.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    const auto cmp = i->monomial <=> j->monomial;
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({j->monomial, sign > 0 ? j->coeff : Rational(-j->coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
      if (c != 0) out.push_back({i->monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(*i);
  for (; j != b.end(); ++j) out.push_back({j->monomial, sign > 0 ? j->coeff : Rational(-j->coeff)});
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  if (a.size() == 1) return b.times_monomial(a.terms_.front().monomial, a.terms_.front().coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_.front().monomial, b.terms_.front().coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, s.coeff * t.coeff);
      if (!inserted) it->second += s.coeff * t.coeff;
    }
  }
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Polynomial::Term& x, const Polynomial::Term& y) { return x.monomial > y.monomial; });
  Polynomial out;
  out.terms_ = std::move(terms);
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the graded-lex order.
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff * c});
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].coeff != b.terms_[k].coeff || !(a.terms_[k].monomial == b.terms_[k].monomial)) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int e = t.monomial.degree_in(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> factors = t.monomial.factors();
    for (auto& f : factors) {
      if (f.first == v) f.second -= 1;
    }
    out.push_back({Monomial(std::move(factors)), t.coeff * e});
  }
  return from_terms(std::move(out));
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return Polynomial();
  if (divisor.size() == 1) {
    const auto& d = divisor.terms_.front();
    Polynomial out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!d.monomial.divides(t.monomial)) return std::nullopt;
      out.terms_.push_back({t.monomial.quotient(d.monomial), t.coeff / d.coeff});
    }
    return out;
  }
  if (divisor.total_degree() > total_degree()) return std::nullopt;
  // Cheap necessary condition: per-variable degrees must fit.
  for (const auto& f : divisor.terms_.front().monomial.factors()) {
    if (degree_in(f.first) < f.second) return std::nullopt;
  }
  const auto& lead = divisor.terms_.front();
  Polynomial remainder = *this;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const auto& r = remainder.terms_.front();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Monomial qm = r.monomial.quotient(lead.monomial);
    Rational qc = r.coeff / lead.coeff;
    remainder -= divisor.times_monomial(qm, qc);
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  Polynomial out;
  out.terms_ = std::move(quotient);
  return out;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().monomial;
  for (std::size_t k = 1; k < terms_.size() && !g.is_one(); ++k) g = g.gcd(terms_[k].monomial);
  return g;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial.quotient(m), t.coeff});
  return out;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(1);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    num_gcd = gcd(num_gcd, t.coeff.get_num());
    den_lcm = lcm(den_lcm, t.coeff.get_den());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Polynomial Polynomial::substitute(const std::map<Var, Polynomial>& bindings) const {
  if (bindings.empty()) return *this;
  std::map<std::pair<Var, int>, Polynomial> powers;
  auto power_of = [&](Var v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, bindings.at(v).pow(static_cast<unsigned>(e))).first->second;
  };
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : terms_) {
    std::vector<Monomial::Factor> kept;
    Polynomial value(Rational(1));
    bool touched = false;
    for (const auto& [v, e] : t.monomial.factors()) {
      if (bindings.count(v)) {
        value = value * power_of(v, e);
        touched = true;
      } else {
        kept.emplace_back(v, e);
      }
    }
    Monomial rest(std::move(kept));
    if (!touched) {
      acc[rest] += t.coeff;
      continue;
    }
    for (const auto& s : value.terms_) {
      acc[s.monomial * rest] += s.coeff * t.coeff;
    }
  }
  std::vector<Term> terms;
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, c});
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::rename(const std::map<Var, Var>& renaming) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Factor> factors = t.monomial.factors();
    for (auto& f : factors) {
      auto it = renaming.find(f.first);
      if (it != renaming.end()) f.first = it->second;
    }
    out.push_back({Monomial(std::move(factors)), t.coeff});
  }
  return from_terms(std::move(out));
}

Rational Polynomial::evaluate(const std::unordered_map<Var, Rational>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (const auto& [var, e] : t.monomial.factors()) {
      auto it = point.find(var);
      if (it == point.end()) fail(ErrorKind::DomainError, "no value for " + var.name());
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), static_cast<unsigned long>(e));
      v *= p;
    }
    sum += v;
  }
  return sum;
}

std::pair<Rational, std::vector<Rational>> Polynomial::evaluate_with_gradient(
    const std::unordered_map<Var, Rational>& point, std::span<const Var> vars) const {
  Rational value = 0;
  std::vector<Rational> grad(vars.size(), Rational(0));
  auto pw = [](const Rational& base, int e) {
    Rational p;
    mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    return p;
  };
  for (const auto& t : terms_) {
    const auto& factors = t.monomial.factors();
    std::vector<Rational> vals(factors.size());
    std::vector<Rational> powers(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) {
      auto it = point.find(factors[k].first);
      if (it == point.end()) fail(ErrorKind::DomainError, "no value for " + factors[k].first.name());
      vals[k] = it->second;
      powers[k] = pw(vals[k], factors[k].second);
    }
    Rational term = t.coeff;
    for (const auto& p : powers) term *= p;
    value += term;
    for (std::size_t g = 0; g < vars.size(); ++g) {
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].first != vars[g]) continue;
        Rational d = t.coeff * factors[k].second * pw(vals[k], factors[k].second - 1);
        for (std::size_t m = 0; m < factors.size(); ++m) {
          if (m != k) d *= powers[m];
        }
        grad[g] += d;
      }
    }
  }
  return {value, grad};
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Rational mag = abs(t.coeff);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (t.monomial.is_one()) {
      out << casimir::to_string(mag);
    } else if (mag == 1) {
      out << t.monomial.to_string();
    } else {
      out << casimir::to_string(mag) << '*' << t.monomial.to_string();
    }
  }
  return out.str();
}

}  // namespace casimir
