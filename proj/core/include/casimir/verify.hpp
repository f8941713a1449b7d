#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/expression.hpp"

namespace casimir {

/// X_i F = sum_{j,k} c_ij^k x_k dF/dx_j. Element variables in F are read as
/// their dual coordinates; parameters raise DomainError.
RationalFunction infinitesimal_apply(const LieAlgebra& L, std::size_t i, const RationalFunction& F);

/// Residual of one generator on an expression: X_i F for rational and affine
/// kinds, sum_j r_j X_i F_j / F_j for power-products.
RationalFunction invariance_residual(const LieAlgebra& L, std::size_t i, const InvariantExpression& F);

bool is_invariant(const LieAlgebra& L, const InvariantExpression& F);

/// dim - rank of (sum_k c_ij^k x_k) at random integer points.
int generic_invariant_count(const LieAlgebra& L, std::uint64_t seed = 0);

/// Maximum rank over three admissible random points of the Jacobian of Fs
/// (log-derivative rows for power-products).
std::size_t jacobian_rank(const std::vector<InvariantExpression>& Fs, const LieAlgebra& L,
                          std::uint64_t seed = 0);

bool functionally_independent(const std::vector<InvariantExpression>& Fs, const LieAlgebra& L,
                              std::uint64_t seed = 0);

/// True iff adding `extra` to `base` does not raise the Jacobian rank.
bool same_invariant_field(const std::vector<InvariantExpression>& base,
                          const std::vector<InvariantExpression>& extra, const LieAlgebra& L,
                          std::uint64_t seed = 0);

struct ExpressionVerdict {
  std::string expression;
  bool invariant = true;
  std::vector<std::string> residuals;  // per generator, "0" when annihilated
};

std::vector<ExpressionVerdict> verify_expressions(const LieAlgebra& L, const std::vector<InvariantExpression>& Fs);
std::string verdicts_to_json(const LieAlgebra& L, const std::vector<ExpressionVerdict>& verdicts);

}  // namespace casimir
