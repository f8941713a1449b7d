#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "casimir/rational.hpp"
#include "casimir/variable.hpp"

namespace casimir {

/// Power product of variables with positive exponents, stored sorted by
/// variable id.
class Monomial {
 public:
  using Factor = std::pair<Var, int>;

  Monomial() = default;
  explicit Monomial(Var v, int exponent = 1);
  /// Factors in any order; zero exponents are dropped, repeated vars merged.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  int degree() const { return degree_; }
  int degree_in(Var v) const;
  bool is_one() const { return factors_.empty(); }
  bool contains(Var v) const { return degree_in(v) != 0; }

  bool divides(const Monomial& other) const;
  /// this / other; other must divide this.
  Monomial quotient(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial without(Var v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Graded lexicographic order; among equal degrees the monomial with the
  /// larger exponent on the smallest differing variable id is greater.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Sparse multivariate polynomial over the rationals. Terms are kept sorted
/// in decreasing graded-lex order with no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
  };

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(Var v);  // NOLINT
  Polynomial(Monomial m, Rational c);
  /// Terms in any order; duplicates are combined.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term if is_constant(); zero otherwise.
  Rational constant_value() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading_term() const { return terms_.front(); }

  int total_degree() const;
  int degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }
  std::set<Var> variables() const;
  bool any_variable(const std::function<bool(Var)>& pred) const;

  /// Coefficient of v^d viewed as a polynomial in v.
  Polynomial coefficient_of(Var v, int d) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial derivative(Var v) const;

  /// Exact quotient when `divisor` divides this polynomial, nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  /// Greatest monomial dividing every term (one for the zero polynomial).
  Monomial monomial_content() const;
  Polynomial divide_monomial(const Monomial& m) const;
  /// Positive rational c such that this / c has coprime integer coefficients.
  Rational content() const;

  /// Simultaneous substitution of polynomial values.
  Polynomial substitute(const std::map<Var, Polynomial>& bindings) const;
  /// Renames variables; unmapped variables are kept.
  Polynomial rename(const std::map<Var, Var>& renaming) const;
  /// Evaluation at a point; unbound variables raise DomainError.
  Rational evaluate(const std::unordered_map<Var, Rational>& point) const;
  /// Value and partial derivatives with respect to `vars` at a point.
  std::pair<Rational, std::vector<Rational>> evaluate_with_gradient(
      const std::unordered_map<Var, Rational>& point, std::span<const Var> vars) const;

  std::string to_string() const;

 private:
  void normalize_terms();
  std::vector<Term> terms_;
};

}  // namespace casimir
