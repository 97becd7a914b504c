#include "plethyra/character.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace plethyra {

ClassFunction::ClassFunction(unsigned n, std::map<Partition, Rat> values)
    : n_(n), values_(std::move(values)) {
    auto all = partitions_of(n);
    if (values_.size() != all.size())
        throw std::invalid_argument("ClassFunction: values must cover every class of Sigma_n");
    for (const auto& lambda : all)
        if (!values_.count(lambda))
            throw std::invalid_argument("ClassFunction: missing class value");
}

const Rat& ClassFunction::at(const Partition& lambda) const {
    auto it = values_.find(lambda);
    if (it == values_.end()) throw std::invalid_argument("ClassFunction: no such class");
    return it->second;
}

Rat ClassFunction::dimension() const {
    return at(Partition(std::vector<unsigned>(n_, 1)));
}

ClassFunction ClassFunction::operator+(const ClassFunction& other) const {
    if (n_ != other.n_) throw std::invalid_argument("ClassFunction: degree mismatch");
    std::map<Partition, Rat> vals = values_;
    for (const auto& [l, v] : other.values_) vals[l] += v;
    return ClassFunction(n_, std::move(vals));
}

ClassFunction ClassFunction::operator-(const ClassFunction& other) const {
    if (n_ != other.n_) throw std::invalid_argument("ClassFunction: degree mismatch");
    std::map<Partition, Rat> vals = values_;
    for (const auto& [l, v] : other.values_) vals[l] -= v;
    return ClassFunction(n_, std::move(vals));
}

ClassFunction ClassFunction::operator*(const Rat& scalar) const {
    std::map<Partition, Rat> vals = values_;
    for (auto& [l, v] : vals) v *= scalar;
    return ClassFunction(n_, std::move(vals));
}

bool ClassFunction::operator==(const ClassFunction& other) const {
    return n_ == other.n_ && values_ == other.values_;
}

namespace {

// Beta set of a partition: distinct first-column hook lengths μ_i + (L−1−i).
std::vector<long> beta_set(const Partition& mu) {
    const auto& parts = mu.parts();
    long len = static_cast<long>(parts.size());
    std::vector<long> beta(parts.size());
    for (long i = 0; i < len; ++i) beta[i] = static_cast<long>(parts[i]) + (len - 1 - i);
    return beta;
}

Partition partition_from_beta(std::vector<long> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<long>());
    long len = static_cast<long>(beta.size());
    std::vector<unsigned> parts;
    for (long i = 0; i < len; ++i) {
        long p = beta[i] - (len - 1 - i);
        if (p > 0) parts.push_back(static_cast<unsigned>(p));
    }
    return Partition(std::move(parts));
}

// Murnaghan–Nakayama: χ^μ at the class whose parts are rho[i..]. Each step
// removes a border strip of the current part's length; strip removals are the
// moves b ↦ b−r on the beta set, with sign (−1)^{#betas strictly between}.
// The memo is keyed by (μ, remaining cycle-type suffix).
using MnMemo = std::map<std::pair<Partition, Partition>, Int>;

Int mn_value(const Partition& mu, const std::vector<unsigned>& rho, std::size_t i, MnMemo& memo) {
    if (mu.n() == 0) return 1;
    Partition suffix(std::vector<unsigned>(rho.begin() + static_cast<long>(i), rho.end()));
    auto key = std::make_pair(mu, std::move(suffix));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    long r = static_cast<long>(rho[i]);
    std::vector<long> beta = beta_set(mu);
    Int total = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        long target = beta[j] - r;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (long b : beta) {
            if (b == target) occupied = true;
            if (b > target && b < beta[j]) ++height;
        }
        if (occupied) continue;
        std::vector<long> nb = beta;
        nb[j] = target;
        Int sub = mn_value(partition_from_beta(std::move(nb)), rho, i + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

CharacterTable::CharacterTable(unsigned n) : n_(n), classes_(partitions_of(n)) {
    for (unsigned i = 0; i < classes_.size(); ++i) index_[classes_[i]] = i;
    table_.resize(classes_.size());
    for (unsigned mu_idx = 0; mu_idx < classes_.size(); ++mu_idx) {
        table_[mu_idx].reserve(classes_.size());
        MnMemo memo;
        for (const auto& lambda : classes_)
            table_[mu_idx].push_back(mn_value(classes_[mu_idx], lambda.parts(), 0, memo));
    }
}

const Int& CharacterTable::value(const Partition& mu, const Partition& lambda) const {
    auto mi = index_.find(mu);
    auto li = index_.find(lambda);
    if (mi == index_.end() || li == index_.end())
        throw std::invalid_argument("CharacterTable: partition of wrong size");
    return table_[mi->second][li->second];
}

const std::vector<Int>& CharacterTable::row(const Partition& mu) const {
    auto mi = index_.find(mu);
    if (mi == index_.end()) throw std::invalid_argument("CharacterTable: partition of wrong size");
    return table_[mi->second];
}

CharacterTable character_table(unsigned n) { return CharacterTable(n); }

ClassFunction irreducible_character(const Partition& mu) {
    unsigned n = mu.n();
    std::map<Partition, Rat> vals;
    MnMemo memo;
    for (const auto& lambda : partitions_of(n))
        vals[lambda] = Rat(mn_value(mu, lambda.parts(), 0, memo));
    return ClassFunction(n, std::move(vals));
}

ClassFunction trivial_character(unsigned n) {
    std::map<Partition, Rat> vals;
    for (const auto& lambda : partitions_of(n)) vals[lambda] = 1;
    return ClassFunction(n, std::move(vals));
}

ClassFunction sign_character(unsigned n) {
    std::map<Partition, Rat> vals;
    for (const auto& lambda : partitions_of(n)) vals[lambda] = cycle_type_sign(lambda);
    return ClassFunction(n, std::move(vals));
}

ClassFunction regular_character(unsigned n) {
    std::map<Partition, Rat> vals;
    for (const auto& lambda : partitions_of(n)) vals[lambda] = 0;
    vals[Partition(std::vector<unsigned>(n, 1))] = Rat(factorial(n));
    return ClassFunction(n, std::move(vals));
}

ClassFunction pointwise_product(const ClassFunction& v, const ClassFunction& w) {
    if (v.n() != w.n()) throw std::invalid_argument("pointwise_product: degree mismatch");
    std::map<Partition, Rat> vals;
    for (const auto& [l, a] : v.values()) vals[l] = a * w.at(l);
    return ClassFunction(v.n(), std::move(vals));
}

ClassFunction induction_product(const ClassFunction& v, const ClassFunction& w) {
    unsigned n = v.n(), m = w.n();
    std::map<Partition, Rat> vals;
    for (const auto& lambda : partitions_of(n + m)) {
        // Split λ's multiset of parts into a piece of total n and its
        // complement; z_λ/(z_μ z_ν) = ∏_r C(k_r, k'_r).
        std::vector<std::pair<unsigned, unsigned>> mult(lambda.mults().begin(), lambda.mults().end());
        Rat total = 0;
        std::map<unsigned, unsigned> chosen;
        std::function<void(std::size_t, unsigned, Rat)> rec = [&](std::size_t idx, unsigned picked,
                                                                  Rat weight) {
            if (picked > n) return;
            if (idx == mult.size()) {
                if (picked != n) return;
                std::map<unsigned, unsigned> rest;
                for (const auto& [r, k] : lambda.mults()) {
                    unsigned kr = k - (chosen.count(r) ? chosen[r] : 0);
                    if (kr > 0) rest[r] = kr;
                }
                total += weight * v.at(Partition::from_mults(chosen)) *
                         w.at(Partition::from_mults(rest));
                return;
            }
            auto [r, k] = mult[idx];
            Int binom = 1;
            for (unsigned take = 0; take <= k; ++take) {
                if (take > 0) {
                    binom = binom * (k - take + 1) / take;
                    chosen[r] = take;
                } else {
                    chosen.erase(r);
                }
                rec(idx + 1, picked + take * r, weight * Rat(binom));
            }
            chosen.erase(r);
        };
        rec(0, 0, Rat(1));
        vals[lambda] = total;
    }
    return ClassFunction(n + m, std::move(vals));
}

void SubgroupProfile::validate() const {
    if (order <= 0) throw std::invalid_argument("SubgroupProfile: order must be positive");
    Int sum = 0;
    for (const auto& [lambda, c] : cycle_type_counts) {
        if (lambda.n() != n) throw std::invalid_argument("SubgroupProfile: class of wrong degree");
        if (c < 0) throw std::invalid_argument("SubgroupProfile: negative count");
        sum += c;
    }
    if (sum != order) throw std::invalid_argument("SubgroupProfile: counts do not sum to the order");
    Partition identity{std::vector<unsigned>(n, 1)};
    auto it = cycle_type_counts.find(identity);
    Int id_count = (it == cycle_type_counts.end()) ? Int(0) : it->second;
    if (n > 0 && id_count != 1)
        throw std::invalid_argument("SubgroupProfile: identity count must be 1");
}

ClassFunction induced_trivial_character(const SubgroupProfile& k) {
    k.validate();
    std::map<Partition, Rat> vals;
    Rat scale = make_rat(factorial(k.n), k.order);
    for (const auto& lambda : partitions_of(k.n)) {
        auto it = k.cycle_type_counts.find(lambda);
        Int count = (it == k.cycle_type_counts.end()) ? Int(0) : it->second;
        Rat value = scale * Rat(count) / Rat(class_size(lambda));
        if (!is_integer(value) || value < 0)
            throw std::invalid_argument("induced_trivial_character: inconsistent profile at a class");
        vals[lambda] = value;
    }
    return ClassFunction(k.n, std::move(vals));
}

}  // namespace plethyra
