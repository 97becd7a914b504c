#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plethyra/character.hpp"
#include "plethyra/laurent.hpp"

namespace plethyra {

// A graded vector space given by an explicit basis: the ground truth against
// which every character formula is checked by literal trace computation.
struct ExplicitGradedSpace {
    std::vector<std::pair<std::string, int>> basis;  // (label, degree)

    std::size_t dim() const { return basis.size(); }
    // Graded trace of the identity: from_betti of the dimension profile.
    LaurentPoly identity_trace() const;
};

// Graded trace of a permutation of the given cycle type acting on V^{⊗n}
// with the Koszul sign rule, times χ_σ(twist) if a twist is supplied.
// Enforces dim(V)^n ≤ 10^6.
LaurentPoly permutation_action_trace(const ExplicitGradedSpace& v, unsigned n,
                                     const Partition& sigma,
                                     const ClassFunction* twist = nullptr);

// Same trace for an explicit permutation (images, 0-based); used to check
// conjugation invariance.
LaurentPoly permutation_action_trace_explicit(const ExplicitGradedSpace& v,
                                              const std::vector<unsigned>& perm,
                                              const ClassFunction* twist = nullptr);

// Graded dimension polynomial (in the (−z)^k convention) of the Schur object
// (V_twist ⊗ V^{⊗n})^{Σₙ}, computed from the explicit averaging operator
// T = (1/n!)·Σ_σ χ_σ(twist)·σ_* on V^{⊗n}. Per graded piece the dimension is
// the trace of the genuine invariant projector, which equals trace(T); when
// the twist is a 1-dimensional character T itself is idempotent and its rank
// is computed by exact Gaussian elimination and checked against the trace,
// and when d·T is idempotent (twist an irreducible of dimension d) the rank
// of d·T is checked to equal d·trace(T).
LaurentPoly projector_rank(const ExplicitGradedSpace& v, unsigned n, const ClassFunction& twist);

// Cycle type of an explicit permutation.
Partition cycle_type_of(const std::vector<unsigned>& perm);

// A canonical permutation with the given cycle type (consecutive cycles).
std::vector<unsigned> canonical_permutation(const Partition& sigma);

// Exact rank of a rational matrix by Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rat>> m);

}  // namespace plethyra
