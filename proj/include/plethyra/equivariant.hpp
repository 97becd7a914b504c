#pragma once

#include <map>
#include <string>
#include <vector>

#include "plethyra/laurent.hpp"
#include "plethyra/series.hpp"

namespace plethyra {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix mat_identity(std::size_t n);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_pow(const RatMatrix& m, unsigned r);
Rat mat_trace(const RatMatrix& m);
void check_square(const RatMatrix& m);

// A graded endomorphism g: one square rational matrix per cohomological
// degree. Its graded trace polynomial is P^g(z) = Σ_k tr(g|H^k)·(−z)^k.
struct GradedEndomorphism {
    std::map<int, RatMatrix> blocks;

    void validate() const;
};

// g ↦ g^r blockwise; realizes ψ_r on equivariant Poincaré polynomials
// together with z ↦ z^r.
GradedEndomorphism endo_power(const GradedEndomorphism& g, unsigned r);

LaurentPoly graded_trace_poly(const GradedEndomorphism& g);

// Quotient of two univariate polynomials in t over Q, both with constant
// term 1, kept gcd-normalized. Expandable to any truncation.
class RationalFunctionSeries {
public:
    RationalFunctionSeries();  // the constant 1
    RationalFunctionSeries(std::vector<Rat> numerator, std::vector<Rat> denominator);

    const std::vector<Rat>& numerator() const { return num_; }
    const std::vector<Rat>& denominator() const { return den_; }

    RationalFunctionSeries operator*(const RationalFunctionSeries& other) const;
    bool operator==(const RationalFunctionSeries& other) const;

    // Power series coefficients through t^N.
    std::vector<Rat> expand(unsigned n) const;

private:
    void normalize();
    std::vector<Rat> num_;
    std::vector<Rat> den_;
};

// det(1−tM) as coefficients [e_0, −e_1, …] via Newton's identities over the
// power traces tr(M^r).
std::vector<Rat> det_one_minus_t(const RatMatrix& m);
// det(1+tM); the coefficient of tⁱ is the trace on the i-th alternating power.
std::vector<Rat> det_one_plus_t(const RatMatrix& m);

// L(V,g)(t) = det(1−tg)^{−1}; coefficients are traces on symmetric powers.
RationalFunctionSeries l_function(const RatMatrix& m);
// λ_t(V,g) = det(1+tg).
RationalFunctionSeries char_poly_lambda(const RatMatrix& m);

// Σ_n P^g(X^{(n)})·tⁿ, computed both as exp(Σ_r P^{g^r}(z^r)·t^r/r) and as
// the product ∏_k L(H^k,g)(z^k t)^{(−1)^k}; the two routes are compared
// coefficient by coefficient and a mismatch throws. graded=false sets z=1.
TruncatedSeries lefschetz_zeta(const GradedEndomorphism& g, unsigned max_degree,
                               bool graded = true);

// Conjugacy-class data of a finite group: sizes and the power maps
// r ↦ class of g^r, as far as declared.
struct GroupClass {
    std::string name;
    Int size = 0;
    std::map<unsigned, std::string> power_maps;
};

struct FiniteGroupData {
    Int order = 0;
    std::vector<GroupClass> classes;

    void validate() const;
    const GroupClass& class_by_name(const std::string& name) const;
    // Class of g^r for g in the named class; composes declared power maps
    // through factorizations of r when the direct entry is absent.
    std::string power_class(const std::string& name, unsigned r) const;
};

// Per class g: exp(Σ_r ψ_r(h)(g)·t^r/r), where ψ_r composes the variable
// scaling with the power map: ψ_r(h)(g) = h(g^r)(vars^r).
std::map<std::string, TruncatedSeries> group_macdonald(
    const FiniteGroupData& g, const std::map<std::string, LaurentPoly>& h, unsigned max_degree);

// Element of the group ring Z[μ̂] of roots of unity: reduced fractions
// a/q ∈ [0,1) with integer multiplicities, a/q standing for e^{2πi·a/q}.
class RootOfUnityElement {
public:
    using Fraction = std::pair<unsigned long, unsigned long>;  // (a, q) reduced, a < q

    RootOfUnityElement() = default;
    static RootOfUnityElement root(unsigned long a, unsigned long q, Int mult = Int(1));
    static RootOfUnityElement one() { return root(0, 1); }

    const std::map<Fraction, Int>& terms() const { return terms_; }

    RootOfUnityElement operator+(const RootOfUnityElement& other) const;
    RootOfUnityElement operator*(const RootOfUnityElement& other) const;
    bool operator==(const RootOfUnityElement& other) const { return terms_ == other.terms_; }

private:
    void add_term(Fraction f, const Int& mult);
    std::map<Fraction, Int> terms_;
};

// ψ_r on Z[μ̂]: λ ↦ λ^r, i.e. a/q ↦ (ra mod q)/q with multiplicities
// accumulated.
RootOfUnityElement mu_adams(const RootOfUnityElement& x, unsigned r);

}  // namespace plethyra
