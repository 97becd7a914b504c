#include "plethyra/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace plethyra {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_) {
        if (p == 0) throw std::invalid_argument("Partition: parts must be positive");
        ++mults_[p];
        n_ += p;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
}

Partition Partition::from_mults(const std::map<unsigned, unsigned>& mults) {
    std::vector<unsigned> parts;
    for (const auto& [r, k] : mults) {
        if (r == 0) throw std::invalid_argument("Partition: parts must be positive");
        parts.insert(parts.end(), k, r);
    }
    return Partition(std::move(parts));
}

unsigned Partition::mult(unsigned r) const {
    auto it = mults_.find(r);
    return it == mults_.end() ? 0u : it->second;
}

Partition Partition::scaled(unsigned factor) const {
    if (factor == 0) throw std::invalid_argument("Partition::scaled: factor must be positive");
    std::vector<unsigned> parts = parts_;
    for (unsigned& p : parts) p *= factor;
    return Partition(std::move(parts));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<unsigned> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(parts));
}

bool Partition::operator<(const Partition& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    // Reverse-lex: the lexicographically larger part list comes first.
    return parts_ > other.parts_;
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> result;
    std::vector<unsigned> current;
    // Parts chosen weakly decreasing; recursion emits reverse-lex order.
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n == 0 ? 1 : n);
    return result;
}

Int stabilizer_order(const Partition& lambda) {
    Int z = 1;
    for (const auto& [r, k] : lambda.mults()) {
        for (unsigned i = 0; i < k; ++i) z *= r;
        z *= factorial(k);
    }
    return z;
}

Int class_size(const Partition& lambda) {
    Int num = factorial(lambda.n());
    Int z = stabilizer_order(lambda);
    return num / z;
}

int cycle_type_sign(const Partition& lambda) {
    unsigned odd = 0;
    for (const auto& [r, k] : lambda.mults())
        if ((r - 1) % 2 == 1) odd += k;
    return odd % 2 == 0 ? 1 : -1;
}

}  // namespace plethyra
