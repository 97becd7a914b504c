#pragma once

#include <map>
#include <string>

#include "plethyra/character.hpp"
#include "plethyra/series.hpp"

namespace plethyra {

// A space (or pair of space and coefficient) entering the calculus only
// through its Poincaré / mixed-Hodge / E-polynomial. The engine never
// computes cohomology; the polynomial is user-supplied.
struct SpaceDescriptor {
    std::string name;
    LaurentPoly poly;
};

// Σ_n tr_{Σₙ}(H*(Xⁿ))·tⁿ = exp(Σ_r p_r·ψ_r(P)·t^r/r): the coefficient of tⁿ
// is Σ_{λ⊢n} (p_λ/z_λ)·∏_r ψ_r(P)^{k_r}.
TruncatedSeries char_series(const SpaceDescriptor& x, unsigned max_degree);

// Σ_{λ⊢n} (p_λ/z_λ)·χ_λ(V)·∏_r ψ_r(P)^{k_r}, the character polynomial of
// the V-twisted tensor power.
SymFunc twisted_character(const ClassFunction& v, const SpaceDescriptor& x);

// S_V([X]) = Σ_{λ⊢n} (χ_λ(V)/z_λ)·∏_r ψ_r(P)^{k_r}, the class of the Schur
// functor attached to V.
LaurentPoly schur_value(const ClassFunction& v, const SpaceDescriptor& x);

// The decomposition cl_n = Σ_μ s_μ·S_μ: values S_μ for all μ ⊢ n, extracted
// through the internal product with s_μ.
std::map<Partition, LaurentPoly> schur_decomposition(const SpaceDescriptor& x, unsigned n);

// exp(Σ_r ψ_r(P)·t^r/r): symmetric products (p_r ≡ 1 specialization).
TruncatedSeries macdonald_series(const SpaceDescriptor& x, unsigned max_degree);
// exp(−Σ_r ψ_r(P)·(−t)^r/r): alternating powers (p_r = (−1)^{r−1}).
TruncatedSeries alternating_series(const SpaceDescriptor& x, unsigned max_degree);
// exp(P·t): coefficient of tⁿ is Pⁿ/n! (p₁ = 1, p_r = 0 for r ≥ 2).
TruncatedSeries kunneth_series(const SpaceDescriptor& x, unsigned max_degree);

// Poincaré polynomial of Xⁿ/K: (1/|K|)·Σ_{g∈K} ∏_r ψ_r(P)^{k_r(g)}, equal to
// schur_value of the induced trivial character.
LaurentPoly quotient_polynomial(const SubgroupProfile& k, const SpaceDescriptor& x);

// Σ_n cl_n(F(X,n))·tⁿ = Exp(E(X)·Log(1 + p₁t)). The descriptor's polynomial
// must be the compactly supported class [H*_c(X)]; additivity under
// decompositions holds only for compact supports, which cannot be checked
// here.
TruncatedSeries configuration_series(const SpaceDescriptor& x, unsigned max_degree);

enum class HilbertMode { ordered, symmetric };

// Power-structure series (1 + Σᵢ cᵢ·h_i·tⁱ)^P (ordered) or (1 + Σᵢ cᵢ·tⁱ)^P
// (symmetric), where cᵢ are the punctual coefficients. The punctual series
// must have scalar coefficients and constant term 1.
TruncatedSeries hilbert_series(const SpaceDescriptor& x, const TruncatedSeries& punctual,
                               unsigned max_degree, HilbertMode mode);

}  // namespace plethyra
