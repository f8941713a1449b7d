#pragma once

#include <string>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/matrix.hpp"
#include "casimir/rational_function.hpp"

namespace casimir {

/// Fundamental lifted invariants: entry k corresponds to coordinate coords[k].
struct LiftedInvariantSet {
  std::vector<std::string> labels;
  std::vector<RationalFunction> entries;
  std::vector<Var> params;  // essential parameters, sorted by id
  std::vector<Var> coords;

  std::optional<std::size_t> index_of(const std::string& label) const;
};

/// Label of the lifted invariant attached to a coordinate: x[3,1] -> I[3,1],
/// x[2,0] -> I[2,0], x4 -> I4.
std::string lifted_label(Var coordinate);

/// (ad e_i)_{kj} = c_ij^k.
QMatrix adjoint_matrix(const LieAlgebra& L, std::size_t i);

bool is_nilpotent(const QMatrix& m);
bool is_diagonal(const QMatrix& m);

/// exp(t m) for nilpotent m; for diagonal m, the diagonal of powers of
/// T = exp(t / scale), which requires scale * m to be integral. The
/// exponential variable of theta(k) is T(k).
SymMatrix exp_ad(const QMatrix& m, Var t, const Integer& scale = 1);

/// Entries of x . B(theta), B the product of exp(theta_i ad e_i) over
/// nilpotent generators in basis order and exp(-theta_i ad e_i) over
/// diagonal ones.
LiftedInvariantSet lifted_generic(const LieAlgebra& L);

/// Entries of B X B^{-1} below the diagonal and I[p,0] for a symbolic group
/// element B with off-diagonal entries b[i,j] and diagonal
/// prod_p E[p]^(gamma_pi * scale_p).
LiftedInvariantSet lifted_triangular(const TriangularSpec& spec);

/// Strictly lower coordinate matrix (x[i,j] for j < i, zero elsewhere).
SymMatrix coordinate_matrix(int n);

}  // namespace casimir
