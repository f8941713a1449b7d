#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/expression.hpp"

namespace casimir {

/// Word e_{i1} ... e_{ir} of basis indices (0-based).
using NCWord = std::vector<std::size_t>;

/// Element of the universal enveloping algebra as a sparse map word ->
/// coefficient. Arithmetic does not reorder words; nc_normalize brings an
/// element to PBW normal form (nondecreasing words).
class NCPolynomial {
 public:
  NCPolynomial() = default;
  explicit NCPolynomial(const Rational& c);
  explicit NCPolynomial(NCWord w, const Rational& c = 1);

  const std::map<NCWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const NCWord& w, const Rational& c);

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  NCPolynomial& operator*=(const Rational& c);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(NCPolynomial a, const Rational& c) { return a *= c; }
  /// Concatenation product (not normalized).
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }

  bool is_normal() const;
  /// Terms by descending degree, words as products of element names.
  std::string to_string(const LieAlgebra& L) const;

 private:
  std::map<NCWord, Rational> terms_;
};

/// PBW normal form by rewriting e_j e_i = e_i e_j + [e_j, e_i] for j > i.
/// With `rng`, the descent to rewrite is chosen at random instead of the
/// leftmost one.
NCPolynomial nc_normalize(const NCWord& w, const LieAlgebra& L, std::mt19937_64* rng = nullptr);
NCPolynomial nc_normalize(const NCPolynomial& p, const LieAlgebra& L, std::mt19937_64* rng = nullptr);

/// Commutative polynomial in element (or dual coordinate) variables as sorted words.
NCPolynomial from_polynomial(const Polynomial& p, const LieAlgebra& L);

/// Averages every word over its distinct permutations, then normalizes.
NCPolynomial sym(const NCPolynomial& p, const LieAlgebra& L);

bool is_casimir(const NCPolynomial& C, const LieAlgebra& L);

/// Symmetrized invariant. Polynomial invariants give sym(F) with no
/// denominator; rational ones give the numerator with letters in basis
/// order and the denominator.
struct SymmetrizedInvariant {
  NCPolynomial numerator;
  std::optional<NCPolynomial> denominator;

  std::string to_string(const LieAlgebra& L) const;
};

/// Raises NotSymmetrizable for power-products with fractional exponents.
SymmetrizedInvariant symmetrize_invariant(const InvariantExpression& F, const LieAlgebra& L);

}  // namespace casimir
