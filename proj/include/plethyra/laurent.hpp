#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "plethyra/rational.hpp"

namespace plethyra {

// Exponent vector, aligned with the owning polynomial's variable list.
using ExpVec = std::vector<std::int64_t>;

// Graded-lexicographic order: total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate Laurent polynomial over exact rationals.
//
// The variable set is dynamic: polynomials in {z}, {y,x,z} or user-defined
// variables coexist, and binary operations merge variable lists (left
// operand's order first, unseen right variables appended). Equality is
// semantic, independent of variable ordering. No zero coefficients are
// stored, and term order is graded-lex for deterministic serialization.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Rat, GradedLex>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c);
    explicit LaurentPoly(long c) : LaurentPoly(Rat(c)) {}
    LaurentPoly(std::vector<std::string> vars, TermMap terms);

    static LaurentPoly variable(const std::string& name, std::int64_t exponent = 1);
    static LaurentPoly monomial(const Rat& coeff, const std::vector<std::string>& vars,
                                const ExpVec& exponents);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // The coefficient of the constant monomial (0 if absent).
    Rat constant_term() const;
    // Requires is_constant().
    Rat constant_value() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly operator*(const Rat& scalar) const;

    LaurentPoly pow(unsigned e) const;

    bool operator==(const LaurentPoly& other) const;
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    // Adams operation ψ_r: every exponent vector scaled entrywise by r.
    LaurentPoly adams(unsigned r) const;

    // Substitution ring homomorphism. Every variable of this polynomial that
    // appears in the assignment is replaced; a variable carrying a negative
    // exponent may only be sent to an invertible value (a nonzero rational or
    // a single unit monomial). Substituted variables leave the variable list.
    LaurentPoly specialize(const std::map<std::string, LaurentPoly>& assignment) const;
    LaurentPoly specialize(const std::string& var, const LaurentPoly& value) const;

    // Re-embeds into a variable list that must contain all used variables.
    LaurentPoly aligned(const std::vector<std::string>& new_vars) const;
    // Drops variables whose exponent is zero in every term.
    LaurentPoly pruned() const;

private:
    void strip_zeros();

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline LaurentPoly operator*(const Rat& scalar, const LaurentPoly& p) { return p * scalar; }

// Merge of two variable lists: a's order first, then b's unseen variables.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

// Σ_k b_k·(−z)^k for a Betti profile k ↦ b_k; negative k allowed, b_k ≥ 0.
LaurentPoly from_betti(const std::map<int, Int>& betti);

struct HodgeEntry {
    int p;
    int q;
    int k;
    Int dim;
};

// Σ h^{p,q,k}·y^p x^q (−z)^k over the given (p,q,k,dim) list; dims ≥ 0.
LaurentPoly from_hodge(const std::vector<HodgeEntry>& entries);

}  // namespace plethyra
