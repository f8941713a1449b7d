#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/rational_function.hpp"

namespace casimir {

/// Formal product of rational functions raised to rational exponents.
class PowerProduct {
 public:
  using Factor = std::pair<RationalFunction, Rational>;

  PowerProduct() = default;
  explicit PowerProduct(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool has_fractional_exponent() const;
  /// Expanded value; requires integer exponents.
  RationalFunction expand() const;

  PowerProduct& operator*=(const PowerProduct& o);
  PowerProduct pow(const Rational& r) const;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// An invariant in one of the three shapes produced by the library.
class InvariantExpression {
 public:
  enum class Kind { Rational, PowerProduct, Affine };

  static InvariantExpression rational(RationalFunction f);
  static InvariantExpression power_product(PowerProduct p);
  /// lead + rest, lead a single coordinate or element variable.
  static InvariantExpression affine(Polynomial lead, RationalFunction rest);

  Kind kind() const { return kind_; }
  /// Value as a rational function (power-products must have integer exponents).
  RationalFunction value() const;
  const PowerProduct& product() const { return product_; }
  const Polynomial& lead() const { return lead_; }
  const RationalFunction& rest() const { return rest_; }

  /// Rational-function factors with exponents; a rational value is one factor
  /// with exponent one.
  std::vector<PowerProduct::Factor> factors() const;

  InvariantExpression rename(const std::map<Var, Var>& renaming) const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Rational;
  RationalFunction value_;
  PowerProduct product_;
  Polynomial lead_;
  RationalFunction rest_;
};

/// Parses the canonical expression grammar. Sums of fractional powers are
/// rejected with ParseError.
InvariantExpression parse_expression(std::string_view text);
RationalFunction parse_rational_function(std::string_view text);

}  // namespace casimir
