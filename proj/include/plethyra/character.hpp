#pragma once

#include <map>
#include <vector>

#include "plethyra/partition.hpp"
#include "plethyra/rational.hpp"

namespace plethyra {

// Rational-valued class function on Σₙ, indexed by cycle type. Virtual
// characters (arbitrary rational values) are allowed throughout; genuine
// characters of Σₙ are integer valued.
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(unsigned n, std::map<Partition, Rat> values);

    unsigned n() const { return n_; }
    const std::map<Partition, Rat>& values() const { return values_; }
    const Rat& at(const Partition& lambda) const;

    // Value at the identity class (1ⁿ).
    Rat dimension() const;

    ClassFunction operator+(const ClassFunction& other) const;
    ClassFunction operator-(const ClassFunction& other) const;
    ClassFunction operator*(const Rat& scalar) const;
    bool operator==(const ClassFunction& other) const;

private:
    unsigned n_ = 0;
    std::map<Partition, Rat> values_;
};

// χ^μ_λ for all μ, λ ⊢ n, computed by the Murnaghan–Nakayama recursion.
// Rows are indexed by μ (the irreducible), columns by λ (the class), both
// in reverse-lexicographic order.
class CharacterTable {
public:
    explicit CharacterTable(unsigned n);

    unsigned n() const { return n_; }
    const std::vector<Partition>& classes() const { return classes_; }
    const Int& value(const Partition& mu, const Partition& lambda) const;
    const std::vector<Int>& row(const Partition& mu) const;

private:
    unsigned n_;
    std::vector<Partition> classes_;
    std::map<Partition, unsigned> index_;
    std::vector<std::vector<Int>> table_;
};

CharacterTable character_table(unsigned n);

// Irreducible character χ^μ of Σₙ as a class function.
ClassFunction irreducible_character(const Partition& mu);
ClassFunction trivial_character(unsigned n);
ClassFunction sign_character(unsigned n);
ClassFunction regular_character(unsigned n);

// Pointwise (tensor) product of characters; both arguments on the same Σₙ.
ClassFunction pointwise_product(const ClassFunction& v, const ClassFunction& w);

// Induction product: the character of Ind_{Σₙ×Σₘ}^{Σ_{n+m}}(V ⊗ W).
ClassFunction induction_product(const ClassFunction& v, const ClassFunction& w);

// A subgroup K ≤ Σₙ given only through its cycle-type census: how many
// elements of K lie in each conjugacy class of the ambient Σₙ.
struct SubgroupProfile {
    unsigned n = 0;
    Int order = 0;
    std::map<Partition, Int> cycle_type_counts;

    void validate() const;
};

// χ(Ind_K^{Σₙ} triv_K); at class λ this is (n!/|K|)·count(λ)/|class λ|.
// Rejects profiles for which some value fails to be a nonnegative integer.
ClassFunction induced_trivial_character(const SubgroupProfile& k);

}  // namespace plethyra
