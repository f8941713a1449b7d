#pragma once

#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/expression.hpp"
#include "casimir/matrix.hpp"

namespace casimir {

/// Determinant of the (k+1)x(k+1) matrix with top row (X(i,1..k), 0) and
/// rows (X(r,1..k), X(r,i)) for r = kappa..n, kappa = n-k+1. Indices are
/// 1-based; requires 1 <= k <= n/2 and k < i < kappa.
RationalFunction bordered_det_x(const SymMatrix& X, int i, int k);

/// |X^{kappa,n}_{1,k}| (rows kappa..n, columns 1..k), 1-based.
RationalFunction corner_minor(const SymMatrix& X, int k);

/// Corner minors k = 1..n/2 of the coordinate matrix.
std::vector<RationalFunction> relative_invariants(const TriangularSpec& spec);

/// Basis of coadjoint invariants in x-coordinates: power-products of the
/// corner minors for k outside k_list, then one affine expression per
/// row p > s' of the reduced gamma.
std::vector<InvariantExpression> coadjoint_basis(const TriangularSpec& spec, const ReducedGamma& reduced);

/// coadjoint_basis rewritten in elements (x[i,j] -> e[j,i], x[p,0] -> f[p]).
std::vector<InvariantExpression> algebra_basis(const TriangularSpec& spec, const ReducedGamma& reduced);

/// Invariants f[k] - f[n-k] + ... of st(n), k = 1..(n-1)/2.
std::vector<InvariantExpression> st_basis(int n);

/// Invariants of t(n): the trace, then k = 1..(n-1)/2.
std::vector<InvariantExpression> t_basis(int n);

/// True iff every beta exponent is rational.
bool has_rational_basis(const ReducedGamma& reduced);

/// Closed-form basis of a family algebra in its own elements. SpecError for
/// algebras without a family tag.
std::vector<InvariantExpression> closed_form_basis(const LieAlgebra& L);

/// Maps element variables of an expression to their dual coordinates.
InvariantExpression to_coordinates(const InvariantExpression& e);
/// Maps coordinate variables of an expression to the dual elements.
InvariantExpression to_elements(const InvariantExpression& e);

}  // namespace casimir
