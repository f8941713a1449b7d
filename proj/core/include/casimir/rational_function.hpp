#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "casimir/polynomial.hpp"

namespace casimir {

/// Quotient of two polynomials kept in partially reduced form: common
/// monomial factors and rational content are cancelled, the denominator is a
/// primitive integer polynomial with positive leading coefficient, and exact
/// polynomial division is applied when one side divides the other. No
/// multivariate gcd is computed; equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Rational(c)) {}          // NOLINT
  RationalFunction(Var v) : num_(v), den_(Rational(1)) {}              // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function.
  Rational constant_value() const;
  /// Polynomial value; requires is_polynomial().
  Polynomial as_polynomial() const;

  std::set<Var> variables() const;
  bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }
  bool any_variable(const std::function<bool(Var)>& pred) const {
    return num_.any_variable(pred) || den_.any_variable(pred);
  }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  /// Integer power; negative exponents invert.
  RationalFunction pow(long e) const;
  RationalFunction inverse() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  RationalFunction derivative(Var v) const;
  /// Simultaneous substitution. A denominator that vanishes identically
  /// raises SingularSubstitution.
  RationalFunction substitute(const std::map<Var, RationalFunction>& bindings) const;
  RationalFunction rename(const std::map<Var, Var>& renaming) const;
  /// Raises DivisionByZero when the denominator vanishes at the point.
  Rational evaluate(const std::unordered_map<Var, Rational>& point) const;

  /// Canonical text: Laurent form when the denominator is a monomial,
  /// otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

/// Solves eq = 0 for v, where the numerator of eq has degree one in v.
RationalFunction solve_linear_for(const RationalFunction& eq, Var v);

}  // namespace casimir
