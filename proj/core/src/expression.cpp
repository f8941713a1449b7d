#include "casimir/expression.hpp"

#include <cctype>
#include <optional>

#include "casimir/error.hpp"

namespace casimir {

PowerProduct::PowerProduct(std::vector<Factor> factors) {
  for (auto& [f, r] : factors) {
    if (f.is_zero()) fail(ErrorKind::DomainError, "power-product factor is zero");
    if (r == 0 || (f.is_constant() && f.constant_value() == 1)) continue;
    bool merged = false;
    for (auto& [g, s] : factors_) {
      if (g == f) {
        s += r;
        merged = true;
        break;
      }
    }
    if (!merged) factors_.emplace_back(std::move(f), r);
  }
  std::erase_if(factors_, [](const Factor& x) { return x.second == 0; });
}

bool PowerProduct::has_fractional_exponent() const {
  for (const auto& [f, r] : factors_) {
    if (!is_integer(r)) return true;
  }
  return false;
}

RationalFunction PowerProduct::expand() const {
  if (has_fractional_exponent()) fail(ErrorKind::DomainError, "fractional power has no rational value");
  RationalFunction out(1L);
  for (const auto& [f, r] : factors_) out *= f.pow(to_long(r));
  return out;
}

PowerProduct& PowerProduct::operator*=(const PowerProduct& o) {
  auto all = factors_;
  all.insert(all.end(), o.factors_.begin(), o.factors_.end());
  *this = PowerProduct(std::move(all));
  return *this;
}

PowerProduct PowerProduct::pow(const Rational& r) const {
  auto all = factors_;
  for (auto& f : all) f.second *= r;
  return PowerProduct(std::move(all));
}

namespace {

bool is_atom(const RationalFunction& f) {
  return f.is_polynomial() && f.numerator().is_monomial() &&
         f.numerator().leading_term().coeff == 1 &&
         f.numerator().leading_term().monomial.factors().size() == 1 &&
         f.numerator().leading_term().monomial.degree() == 1;
}

}  // namespace

std::string PowerProduct::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [f, r] : factors_) {
    if (!out.empty()) out += '*';
    const std::string body = is_atom(f) ? f.to_string() : "(" + f.to_string() + ")";
    out += body;
    if (r == 1) continue;
    if (is_integer(r) && r > 0) {
      out += "^" + casimir::to_string(r);
    } else {
      out += "^(" + casimir::to_string(r) + ")";
    }
  }
  return out;
}

InvariantExpression InvariantExpression::rational(RationalFunction f) {
  InvariantExpression e;
  e.kind_ = Kind::Rational;
  e.value_ = std::move(f);
  return e;
}

InvariantExpression InvariantExpression::power_product(PowerProduct p) {
  InvariantExpression e;
  e.kind_ = Kind::PowerProduct;
  if (!p.has_fractional_exponent()) e.value_ = p.expand();
  e.product_ = std::move(p);
  return e;
}

InvariantExpression InvariantExpression::affine(Polynomial lead, RationalFunction rest) {
  InvariantExpression e;
  e.kind_ = Kind::Affine;
  e.value_ = RationalFunction(lead) + rest;
  e.lead_ = std::move(lead);
  e.rest_ = std::move(rest);
  return e;
}

RationalFunction InvariantExpression::value() const {
  if (kind_ == Kind::PowerProduct && product_.has_fractional_exponent()) {
    fail(ErrorKind::DomainError, "power-product with fractional exponents has no rational value");
  }
  return value_;
}

std::vector<PowerProduct::Factor> InvariantExpression::factors() const {
  if (kind_ == Kind::PowerProduct) return product_.factors();
  return {{value_, Rational(1)}};
}

InvariantExpression InvariantExpression::rename(const std::map<Var, Var>& renaming) const {
  switch (kind_) {
    case Kind::Rational: return rational(value_.rename(renaming));
    case Kind::Affine: return affine(lead_.rename(renaming), rest_.rename(renaming));
    case Kind::PowerProduct: {
      std::vector<PowerProduct::Factor> fs;
      for (const auto& [f, r] : product_.factors()) fs.emplace_back(f.rename(renaming), r);
      return power_product(PowerProduct(std::move(fs)));
    }
  }
  return *this;
}

std::string InvariantExpression::to_string() const {
  if (kind_ == Kind::PowerProduct) return product_.to_string();
  return value_.to_string();
}

// ---------------------------------------------------------------- parser

namespace {

// Intermediate value: a power-product, which collapses to a rational
// function whenever its exponents are integers.
struct Value {
  RationalFunction f;
  std::optional<PowerProduct> p;

  static Value of(RationalFunction f) { return Value{std::move(f), std::nullopt}; }
  static Value of(PowerProduct p) {
    if (!p.has_fractional_exponent()) return of(p.expand());
    return Value{RationalFunction(), std::move(p)};
  }
  bool rational() const { return !p; }
  const RationalFunction& as_rational() const { return f; }
  PowerProduct as_product() const { return p ? *p : PowerProduct({{f, Rational(1)}}); }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Value parse() {
    Value v = sum();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at position " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value sum() {
    skip();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Value acc = product();
    if (negate) acc = negated(acc);
    for (;;) {
      if (accept('+')) {
        acc = add(acc, product(), false);
      } else if (accept('-')) {
        acc = add(acc, product(), true);
      } else {
        return acc;
      }
    }
  }

  Value negated(const Value& v) {
    if (v.rational()) return Value::of(-v.as_rational());
    PowerProduct p = *v.p;
    p *= PowerProduct({{RationalFunction(-1L), Rational(1)}});
    return Value::of(p);
  }

  Value add(const Value& a, const Value& b, bool subtract) {
    if (!a.rational() || !b.rational()) error("sum involving a fractional power");
    return Value::of(subtract ? a.as_rational() - b.as_rational() : a.as_rational() + b.as_rational());
  }

  Value product() {
    Value acc = power();
    for (;;) {
      if (accept('*')) {
        Value rhs = power();
        acc = multiply(acc, rhs);
      } else if (accept('/')) {
        Value rhs = power();
        if (rhs.rational() && rhs.as_rational().is_zero()) error("division by zero");
        acc = multiply(acc, Value::of(rhs.as_product().pow(Rational(-1))));
      } else {
        return acc;
      }
    }
  }

  Value multiply(const Value& a, const Value& b) {
    if (a.rational() && b.rational()) return Value::of(a.as_rational() * b.as_rational());
    if ((a.rational() && a.as_rational().is_zero()) || (b.rational() && b.as_rational().is_zero())) {
      return Value::of(RationalFunction());
    }
    PowerProduct p = a.as_product();
    p *= b.as_product();
    return Value::of(p);
  }

  Value power() {
    Value base = atom();
    if (!accept('^')) return base;
    const Rational r = exponent();
    if (is_integer(r) && base.rational()) {
      if (base.as_rational().is_zero() && r < 0) error("division by zero");
      return Value::of(base.as_rational().pow(to_long(r)));
    }
    if (base.rational() && base.as_rational().is_zero()) error("zero raised to a fractional power");
    return Value::of(base.as_product().pow(r));
  }

  Rational exponent() {
    skip();
    if (accept('(')) {
      bool negative = accept('-');
      Rational r = number();
      if (accept('/')) r /= number();
      if (!accept(')')) error("expected ')'");
      return negative ? Rational(-r) : r;
    }
    bool negative = accept('-');
    Rational r = number();
    return negative ? Rational(-r) : r;
  }

  Rational number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10));
  }

  Value atom() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = sum();
      if (!accept(')')) error("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Value::of(RationalFunction(number()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '[') {
        while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
        if (pos_ == text_.size()) error("unterminated variable");
        ++pos_;
      } else {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      std::string name;
      for (char ch : text_.substr(start, pos_ - start)) {
        if (!std::isspace(static_cast<unsigned char>(ch))) name += ch;
      }
      auto v = parse_var(name);
      if (!v) error("unknown variable '" + name + "'");
      return Value::of(RationalFunction(*v));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

InvariantExpression parse_expression(std::string_view text) {
  Value v = Parser(text).parse();
  if (v.rational()) return InvariantExpression::rational(v.as_rational());
  return InvariantExpression::power_product(*v.p);
}

RationalFunction parse_rational_function(std::string_view text) {
  Value v = Parser(text).parse();
  if (!v.rational()) fail(ErrorKind::ParseError, "expected a rational expression: " + std::string(text));
  return v.as_rational();
}

}  // namespace casimir
