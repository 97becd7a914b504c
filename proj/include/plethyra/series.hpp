#pragma once

#include <vector>

#include "plethyra/symfunc.hpp"

namespace plethyra {

// Degree-bounded formal power series in t with SymFunc coefficients. All
// arithmetic silently truncates at the bound; binary operations on series
// with different bounds truncate to the minimum. The truncation bound is
// fixed at creation; there is no implicit global state.
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned max_degree);
    TruncatedSeries(unsigned max_degree, std::vector<SymFunc> coeffs);

    static TruncatedSeries one(unsigned max_degree);
    // The series c·t^k.
    static TruncatedSeries term(unsigned max_degree, unsigned k, const SymFunc& c);

    unsigned max_degree() const { return max_degree_; }
    const SymFunc& at(unsigned n) const;
    void set(unsigned n, SymFunc c);
    const std::vector<SymFunc>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const SymFunc& scalar) const;
    TruncatedSeries operator*(const LaurentPoly& scalar) const;
    TruncatedSeries operator*(const Rat& scalar) const;
    bool operator==(const TruncatedSeries& other) const;
    bool operator!=(const TruncatedSeries& other) const { return !(*this == other); }

    TruncatedSeries truncated(unsigned bound) const;

    // Series with constant term 1 are invertible; b_n recursion.
    TruncatedSeries reciprocal() const;
    // Integer power, negative through the reciprocal.
    TruncatedSeries pow(long e) const;

private:
    unsigned max_degree_;
    std::vector<SymFunc> coeffs_;
};

inline TruncatedSeries operator*(const SymFunc& c, const TruncatedSeries& s) { return s * c; }

// Ordinary exponential over the Q-algebra of coefficients; requires zero
// constant term.
TruncatedSeries exp(const TruncatedSeries& s);
// Ordinary logarithm; requires constant term 1.
TruncatedSeries log(const TruncatedSeries& s);

// Plethystic exponential: Exp(Σ_{n≥1} c_n tⁿ) =
// exp(Σ_{r≥1} (1/r) Σ_n Ψ_r(c_n) t^{rn}), with Ψ_r the tensor Adams
// operation on coefficients (Laurent exponent scaling and p_j ↦ p_{rj}).
// Requires zero constant term.
TruncatedSeries plethystic_exp(const TruncatedSeries& s);
// Inverse of Exp on series with constant term 1.
TruncatedSeries plethystic_log(const TruncatedSeries& s);

// Power structure (1+A)^b := Exp(b·Log(1+A)); base must have constant term 1.
TruncatedSeries power_structure(const TruncatedSeries& base, const LaurentPoly& exponent);

}  // namespace plethyra
