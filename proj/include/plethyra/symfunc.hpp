#pragma once

#include <functional>
#include <map>

#include "plethyra/character.hpp"
#include "plethyra/laurent.hpp"
#include "plethyra/partition.hpp"

namespace plethyra {

// Symmetric function in the power-sum basis, with coefficients in a Laurent
// polynomial ring: a sparse map λ ↦ coefficient of p_λ. The p-basis is the
// only internal representation; h, e and Schur functions exist as
// conversions in. Degree n pieces are the terms with λ ⊢ n.
class SymFunc {
public:
    using TermMap = std::map<Partition, LaurentPoly>;

    SymFunc() = default;
    explicit SymFunc(const LaurentPoly& constant);
    explicit SymFunc(const Rat& constant);
    SymFunc(TermMap terms);

    static SymFunc p(const Partition& lambda);
    // p_r for a single part r ≥ 1.
    static SymFunc p(unsigned r);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True when the only term is the empty partition's.
    bool is_scalar() const;
    LaurentPoly coefficient(const Partition& lambda) const;
    // Largest |λ| with nonzero coefficient; 0 for scalars and zero.
    unsigned degree() const;
    // The part of the function in degree exactly n.
    SymFunc homogeneous_part(unsigned n) const;
    // True when every term has |λ| = n (vacuously true for 0).
    bool is_homogeneous(unsigned n) const;
    // Discards all terms of degree > bound.
    SymFunc truncated(unsigned bound) const;

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc operator+(const SymFunc& other) const;
    SymFunc operator-(const SymFunc& other) const;
    SymFunc operator-() const;
    SymFunc operator*(const SymFunc& other) const;
    SymFunc operator*(const LaurentPoly& scalar) const;
    SymFunc operator*(const Rat& scalar) const;
    bool operator==(const SymFunc& other) const;
    bool operator!=(const SymFunc& other) const { return !(*this == other); }

    // Internal (Hadamard) product: p_λ ∗ p_μ = δ_{λμ} z_λ p_λ, coefficients
    // multiplying in the Laurent ring.
    SymFunc internal_product(const SymFunc& other) const;

    // Tensor Adams operation Ψ_r: coefficients get the Laurent Adams ψ_r and
    // every p_j is reindexed to p_{rj}.
    SymFunc adams_twist(unsigned r) const;

    // Apply a ring map to every Laurent coefficient (variable assignments).
    SymFunc map_coefficients(const std::function<LaurentPoly(const LaurentPoly&)>& fn) const;

    // Substitute p_i ↦ rule(i) and collapse into the coefficient ring.
    LaurentPoly specialize_p(const std::function<LaurentPoly(unsigned)>& rule) const;
    // p_r ↦ 1 for all r (Σₙ-invariant part).
    LaurentPoly specialize_p_ones() const;
    // p_r ↦ (−1)^{r−1} (anti-invariant part).
    LaurentPoly specialize_p_alternating() const;
    // p_1 ↦ 1, p_r ↦ 0 for r ≥ 2 (forgetting the action, 1/n!-normalized).
    LaurentPoly specialize_p_forget() const;

private:
    void strip_zeros();
    TermMap terms_;
};

inline SymFunc operator*(const LaurentPoly& c, const SymFunc& f) { return f * c; }
inline SymFunc operator*(const Rat& c, const SymFunc& f) { return f * c; }

// Plethysm f ∘ g: each p_i of f is replaced by the series obtained from g by
// applying the Laurent Adams ψ_i to every coefficient and reindexing
// p_j ↦ p_{ij}; f's own coefficients are untouched. With max_degree ≥ 0 the
// result is truncated to that total degree (pass a bound whenever the inputs
// make the result grow beyond what is needed).
SymFunc plethysm(const SymFunc& f, const SymFunc& g, int max_degree = -1);

// h_n = Σ_{λ⊢n} p_λ/z_λ.
SymFunc h_basis(unsigned n);
// e_n = Σ_{λ⊢n} ε_λ p_λ/z_λ.
SymFunc e_basis(unsigned n);
// s_μ = Σ_{λ} (χ^μ_λ/z_λ) p_λ.
SymFunc schur(const Partition& mu);
// h_λ = ∏ h_r^{k_r}, e_λ = ∏ e_r^{k_r}.
SymFunc h_basis(const Partition& lambda);
SymFunc e_basis(const Partition& lambda);

// Frobenius characteristic ch_F(V) = Σ_{λ⊢n} (χ_λ(V)/z_λ)·p_λ.
SymFunc frobenius_char(const ClassFunction& v);

}  // namespace plethyra
