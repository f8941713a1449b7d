#pragma once

#include <string>
#include <vector>

#include "casimir/algebra.hpp"
#include "casimir/coadjoint.hpp"

namespace casimir {

/// Advisory normalization plan entry.
///  Zero:  labels = {entry}; impose entry = 0.
///  Chain: labels = ordered entries; replace them by their prefix products
///         Ihat[1], Ihat[2], ... before the multiplicative phase.
///  Unit:  labels = {entry or Ihat[k]}; prefer it as a normalized (= 1)
///         entry in the multiplicative phase.
struct Hint {
  enum class Kind { Zero, Unit, Chain };
  Kind kind = Kind::Zero;
  std::vector<std::string> labels;
};

struct NormalizationResult {
  std::vector<RationalFunction> basis;
  std::vector<std::string> basis_labels;
  int rho = 0;
  int n_g = 0;
  std::vector<std::string> trace;
};

/// Eliminates parameters from lifted invariants by normalization. Entries
/// are set to 0 and solved linearly for a parameter, preferring hinted
/// entries; entries of the form (exponential-parameter monomial) x (free
/// factor) are normalized to 1 through their exponent lattice. Raises
/// NormalizationStuck when neither step applies.
NormalizationResult normalize(const LiftedInvariantSet& lifted, const std::vector<Hint>& hints = {});

/// Normalization plan for the triangular lifted invariants of a reduced spec.
std::vector<Hint> triangular_hints(const TriangularSpec& spec, const ReducedGamma& reduced);

/// Normalizes an algebra: family algebras with a triangular spec go through
/// the reduced spec, the triangular lifted invariants and their plan;
/// other algebras through lifted_generic. Basis is in the algebra's own
/// coordinates.
NormalizationResult normalize_algebra(const LieAlgebra& L);

}  // namespace casimir
