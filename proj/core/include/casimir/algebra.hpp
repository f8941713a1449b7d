#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/matrix.hpp"
#include "casimir/rational.hpp"
#include "casimir/variable.hpp"

namespace casimir {

/// Sparse vector over basis indices (zero-based), sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Parameter data (n, s, gamma) of the solvable algebra with triangular
/// nilradical and s diagonal nilindependent elements.
struct TriangularSpec {
  int n = 2;
  int s = 0;
  std::vector<std::vector<Rational>> gamma;  // s rows of length n

  const Rational& g(int p, int i) const { return gamma[p - 1][i - 1]; }  // 1-based
  /// Raises SpecError unless n >= 2, 0 <= s <= n-1 and the rows of gamma
  /// together with the all-ones row are linearly independent.
  void validate() const;
  /// Each row multiplied by the lcm of its denominators.
  TriangularSpec integer_scaled() const;
  /// Per-row scale factors used by integer_scaled().
  std::vector<Integer> row_scales() const;
};

struct FamilyTag {
  std::string family;  // t0, t, st, t_gamma, g48
  int n = 0;
  TriangularSpec spec;  // t0, st, t_gamma
  Rational b;           // g48
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Basis given by element variables; labels default to their names.
  explicit LieAlgebra(std::vector<Var> elements, std::vector<std::string> labels = {});

  std::size_t dim() const { return elements_.size(); }
  const std::vector<Var>& elements() const { return elements_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Var element(std::size_t k) const { return elements_[k]; }
  Var coordinate(std::size_t k) const { return coordinates_[k]; }
  const std::vector<Var>& coordinates() const { return coordinates_; }
  std::optional<std::size_t> index_of(Var v) const;

  /// Sets [e_i, e_j] (and [e_j, e_i] by antisymmetry).
  void set_bracket(std::size_t i, std::size_t j, SparseVector value);
  const SparseVector& bracket(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  /// Structure constant c_ij^k.
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

  const std::optional<FamilyTag>& family() const { return family_; }
  void set_family(FamilyTag tag) { family_ = std::move(tag); }

 private:
  std::vector<Var> elements_;
  std::vector<Var> coordinates_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
  std::optional<FamilyTag> family_;
};

struct JacobiViolation {
  std::size_t i, j, k;  // zero-based, i < j < k
  SparseVector residual;
};

/// Empty when the Jacobi identity holds for all triples.
std::vector<JacobiViolation> validate(const LieAlgebra& L);

/// [a, b] for sparse vectors a, b.
SparseVector bracket(const LieAlgebra& L, const SparseVector& a, const SparseVector& b);

/// Zero-based position of e(i,j), i<j, in row-major order.
std::size_t triangular_index(int n, int i, int j);

LieAlgebra build_t_gamma(const TriangularSpec& spec);
LieAlgebra build_t0(int n);
LieAlgebra build_st(int n);
LieAlgebra build_t(int n);
LieAlgebra build_g48(const Rational& b);

TriangularSpec t0_spec(int n);
TriangularSpec st_spec(int n);
/// t_gamma(3) with gamma = (-1, 0, b), isomorphic to g48 via
/// e1 ~ e(1,3), e2 ~ e(1,2), e3 ~ e(2,3), e4 ~ f(1).
TriangularSpec g48_spec(const Rational& b);

/// Reduced form of the parameter matrix.
struct ReducedGamma {
  std::vector<std::vector<Rational>> gamma_reduced;
  int s_prime = 0;
  std::vector<int> k_list;                  // 1-based, increasing
  std::vector<std::vector<Rational>> alpha; // s' x [n/2], alpha[q][k-1]
  std::vector<std::vector<Rational>> beta;  // s' x [n/2], beta[q][k-1]
  Rational delta = 1;
  QMatrix row_transform;                    // s x s, row_transform * gamma = gamma_reduced
  std::vector<Rational> shift;              // per-row shift, always zero here

  /// Spec with the reduced gamma.
  TriangularSpec reduced_spec(int n) const;
};

ReducedGamma reduce_gamma(const TriangularSpec& spec);
/// Checks the four reduced-form conditions; returns an empty string when
/// they hold, else a description of the first failure.
std::string check_reduced_form(int n, const ReducedGamma& r);
/// Rank of the s x [n/2] matrix (gamma_{p,kappa} - gamma_{p,k}).
int gamma_difference_rank(const TriangularSpec& spec);

/// Dimension of the center.
std::size_t center_dim(const LieAlgebra& L);

/// Algebra file I/O: full bracket table or family shorthand.
LieAlgebra parse_algebra_json(std::string_view text);
std::string algebra_to_json(const LieAlgebra& L, bool expand = false);

}  // namespace casimir
