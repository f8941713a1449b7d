#include "casimir/rational_function.hpp"

#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

namespace {

Polynomial scaled(const Polynomial& p, const Rational& c) { return p * c; }

// Sum over terms of c * rest * prod_v num_v^e * den_v^(D_v - e).
Polynomial homogeneous_substitute(const Polynomial& p,
                                  const std::map<Var, RationalFunction>& bindings,
                                  const std::map<Var, int>& degrees) {
  std::map<std::pair<Var, int>, Polynomial> num_pow;
  std::map<std::pair<Var, int>, Polynomial> den_pow;
  auto power = [&](std::map<std::pair<Var, int>, Polynomial>& cache, Var v, int e,
                   bool numerator) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& b = bindings.at(v);
    const Polynomial& base = numerator ? b.numerator() : b.denominator();
    return cache.emplace(key, base.pow(static_cast<unsigned>(e))).first->second;
  };
  Polynomial out;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> kept;
    Polynomial value(t.coeff);
    std::map<Var, int> seen;
    for (const auto& [v, e] : t.monomial.factors()) {
      if (bindings.count(v)) {
        seen[v] = e;
      } else {
        kept.emplace_back(v, e);
      }
    }
    for (const auto& [v, d] : degrees) {
      const int e = seen.count(v) ? seen[v] : 0;
      if (e > 0) value = value * power(num_pow, v, e, true);
      if (d - e > 0 && !bindings.at(v).denominator().is_constant()) {
        value = value * power(den_pow, v, d - e, false);
      }
    }
    out += value.times_monomial(Monomial(std::move(kept)), Rational(1));
  }
  return out;
}

std::string laurent_term(const Monomial& num, const Monomial& den) {
  const Monomial g = num.gcd(den);
  const Monomial top = num.quotient(g);
  const Monomial bottom = den.quotient(g);
  std::string out = top.to_string();
  if (!bottom.is_one()) {
    out += '/';
    out += bottom.factors().size() > 1 ? "(" + bottom.to_string() + ")" : bottom.to_string();
  }
  return out;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Monomial g = num_.monomial_content().gcd(den_.monomial_content());
  if (!g.is_one()) {
    num_ = num_.divide_monomial(g);
    den_ = den_.divide_monomial(g);
  }
  Rational c = den_.content();
  if (den_.leading_term().coeff < 0) c = -c;
  if (c != 1) {
    const Rational inv = 1 / c;
    num_ = scaled(num_, inv);
    den_ = scaled(den_, inv);
  }
  if (den_.is_constant()) return;
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!num_.is_constant()) {
    if (auto q = den_.divide_exact(num_)) {
      num_ = Polynomial(Rational(1));
      den_ = std::move(*q);
      canonicalize();
    }
  }
}

Rational RationalFunction::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

Polynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial()) fail(ErrorKind::DomainError, "not a polynomial: " + to_string());
  return num_ * (1 / den_.constant_value());
}

std::set<Var> RationalFunction::variables() const {
  auto out = num_.variables();
  for (Var v : den_.variables()) out.insert(v);
  return out;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (o.den_.is_constant()) {
    num_ += o.num_ * den_ * (1 / o.den_.constant_value());
  } else if (den_.is_constant()) {
    num_ = num_ * o.den_ * (1 / den_.constant_value()) + o.num_;
    den_ = o.den_;
  } else if (auto k = den_.divide_exact(o.den_)) {
    num_ += o.num_ * *k;
  } else if (auto k2 = o.den_.divide_exact(den_)) {
    num_ = num_ * *k2 + o.num_;
    den_ = o.den_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  Polynomial a = num_;
  Polynomial b = den_;
  Polynomial c = o.num_;
  Polynomial d = o.den_;
  if (!d.is_constant()) {
    if (auto q = a.divide_exact(d)) {
      a = std::move(*q);
      d = Polynomial(Rational(1));
    }
  }
  if (!b.is_constant()) {
    if (auto q = c.divide_exact(b)) {
      c = std::move(*q);
      b = Polynomial(Rational(1));
    }
  }
  num_ = a * c;
  den_ = b * d;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero rational function");
  return *this *= o.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction out;
  out.num_ = num_.pow(static_cast<unsigned>(e));
  out.den_ = den_.pow(static_cast<unsigned>(e));
  return out;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction RationalFunction::derivative(Var v) const {
  if (!contains(v)) return RationalFunction();
  if (den_.is_constant()) return RationalFunction(num_.derivative(v), den_);
  if (!den_.contains(v)) return RationalFunction(num_.derivative(v), den_);
  return RationalFunction(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RationalFunction RationalFunction::substitute(const std::map<Var, RationalFunction>& bindings) const {
  std::map<Var, RationalFunction> active;
  for (const auto& [v, r] : bindings) {
    if (contains(v)) active.emplace(v, r);
  }
  if (active.empty()) return *this;
  bool polynomial = true;
  for (const auto& [v, r] : active) polynomial = polynomial && r.is_polynomial();
  Polynomial n;
  Polynomial d;
  if (polynomial) {
    std::map<Var, Polynomial> pb;
    for (const auto& [v, r] : active) pb.emplace(v, r.as_polynomial());
    n = num_.substitute(pb);
    d = den_.substitute(pb);
  } else {
    std::map<Var, int> degrees;
    for (const auto& [v, r] : active) {
      const int dv = std::max(num_.degree_in(v), den_.degree_in(v));
      if (dv > 0) degrees.emplace(v, dv);
    }
    n = homogeneous_substitute(num_, active, degrees);
    d = homogeneous_substitute(den_, active, degrees);
  }
  if (d.is_zero()) fail(ErrorKind::SingularSubstitution, "denominator vanishes after substitution");
  return RationalFunction(std::move(n), std::move(d));
}

RationalFunction RationalFunction::rename(const std::map<Var, Var>& renaming) const {
  return RationalFunction(num_.rename(renaming), den_.rename(renaming));
}

Rational RationalFunction::evaluate(const std::unordered_map<Var, Rational>& point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return as_polynomial().to_string();
  if (den_.is_monomial()) {
    const auto& dt = den_.leading_term();
    std::ostringstream out;
    bool first = true;
    for (const auto& t : num_.terms()) {
      const Rational c = t.coeff / dt.coeff;
      const bool negative = c < 0;
      const Rational mag = abs(c);
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      const std::string body = laurent_term(t.monomial, dt.monomial);
      if (mag == 1) {
        out << body;
      } else if (body == "1") {
        out << casimir::to_string(mag);
      } else if (body.rfind("1/", 0) == 0) {
        out << casimir::to_string(mag) << body.substr(1);
      } else {
        out << casimir::to_string(mag) << '*' << body;
      }
    }
    return out.str();
  }
  const std::string n = num_.to_string();
  const bool wrap = num_.size() > 1 || n.front() == '-';
  return (wrap ? "(" + n + ")" : n) + "/(" + den_.to_string() + ")";
}

RationalFunction solve_linear_for(const RationalFunction& eq, Var v) {
  const Polynomial& n = eq.numerator();
  const int d = n.degree_in(v);
  if (d == 0) fail(ErrorKind::NotLinear, v.name() + " does not occur");
  if (d > 1) {
    fail(ErrorKind::NotLinear, "equation is not linear in " + v.name());
  }
  const Polynomial a = n.coefficient_of(v, 1);
  const Polynomial b = n.coefficient_of(v, 0);
  if (a.is_zero()) fail(ErrorKind::NoSolution, "coefficient of " + v.name() + " vanishes");
  return RationalFunction(-b, a);
}

}  // namespace casimir
