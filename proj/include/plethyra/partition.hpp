#pragma once

#include <map>
#include <vector>

#include "plethyra/rational.hpp"

namespace plethyra {

// Integer partition λ ⊢ n, doubling as the cycle type of a permutation.
// Stored as the sparse multiplicity map r ↦ k_r (the formulas index by k_r);
// the weakly decreasing part list is derived once and cached.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);
    static Partition from_mults(const std::map<unsigned, unsigned>& mults);

    unsigned n() const { return n_; }
    bool empty() const { return n_ == 0; }
    const std::vector<unsigned>& parts() const { return parts_; }
    const std::map<unsigned, unsigned>& mults() const { return mults_; }
    unsigned mult(unsigned r) const;
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }

    // Scales every part by a positive factor: (2,1) scaled by 3 is (6,3).
    Partition scaled(unsigned factor) const;
    // Concatenation λ ∪ μ (multiplicities add).
    Partition merged(const Partition& other) const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    // Graded order: by n first, then reverse-lexicographic on part lists,
    // so map iteration matches the enumeration order of partitions_of.
    bool operator<(const Partition& other) const;

private:
    std::map<unsigned, unsigned> mults_;
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

// All partitions of n in reverse-lexicographic order on part lists:
// partitions_of(3) = [(3), (2,1), (1,1,1)]; partitions_of(0) = [()].
std::vector<Partition> partitions_of(unsigned n);

// z_λ = ∏_r r^{k_r}·k_r!, the order of the centralizer of a permutation of
// cycle type λ.
Int stabilizer_order(const Partition& lambda);

// n!/z_λ, the size of the conjugacy class with cycle type λ.
Int class_size(const Partition& lambda);

// ε_λ = ∏_r (−1)^{(r−1)k_r}, the sign of a permutation of cycle type λ.
int cycle_type_sign(const Partition& lambda);

}  // namespace plethyra
