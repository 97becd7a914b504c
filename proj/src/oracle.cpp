#include "plethyra/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace plethyra {

namespace {

constexpr double kSizeBound = 1e6;

void check_size(std::size_t dim, unsigned n) {
    double total = 1;
    for (unsigned i = 0; i < n; ++i) total *= static_cast<double>(dim);
    if (total > kSizeBound) throw std::domain_error("oracle: dim(V)^n exceeds the size bound");
}

// All n-tuples of basis indices, odometer order.
std::vector<std::vector<unsigned>> all_tuples(std::size_t dim, unsigned n) {
    if (n == 0) return {std::vector<unsigned>{}};
    if (dim == 0) return {};
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> current(n, 0);
    while (true) {
        tuples.push_back(current);
        unsigned i = 0;
        for (; i < n; ++i) {
            if (++current[i] < dim) break;
            current[i] = 0;
        }
        if (i == n) break;
    }
    return tuples;
}

// Koszul sign of σ on the tuple: (−1) for each inverted pair of odd-degree
// slots. σ moves the factor in slot i to slot σ(i).
int koszul_sign(const ExplicitGradedSpace& v, const std::vector<unsigned>& tuple,
                const std::vector<unsigned>& perm) {
    unsigned inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (v.basis[tuple[i]].second % 2 == 0) continue;
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (v.basis[tuple[j]].second % 2 == 0) continue;
            if (perm[i] > perm[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

int total_degree(const ExplicitGradedSpace& v, const std::vector<unsigned>& tuple) {
    int d = 0;
    for (unsigned idx : tuple) d += v.basis[idx].second;
    return d;
}

}  // namespace

LaurentPoly ExplicitGradedSpace::identity_trace() const {
    std::map<int, Int> betti;
    for (const auto& [label, k] : basis) ++betti[k];
    return from_betti(betti);
}

Partition cycle_type_of(const std::vector<unsigned>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<unsigned> parts;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

std::vector<unsigned> canonical_permutation(const Partition& sigma) {
    std::vector<unsigned> perm(sigma.n());
    unsigned start = 0;
    for (unsigned part : sigma.parts()) {
        for (unsigned i = 0; i < part; ++i) perm[start + i] = start + (i + 1) % part;
        start += part;
    }
    return perm;
}

LaurentPoly permutation_action_trace_explicit(const ExplicitGradedSpace& v,
                                              const std::vector<unsigned>& perm,
                                              const ClassFunction* twist) {
    unsigned n = static_cast<unsigned>(perm.size());
    check_size(v.dim(), n);
    LaurentPoly out({"z"}, {});
    for (const auto& tuple : all_tuples(v.dim(), n)) {
        bool fixed = true;
        for (std::size_t i = 0; i < perm.size() && fixed; ++i)
            if (tuple[perm[i]] != tuple[i]) fixed = false;
        if (!fixed) continue;
        int k = total_degree(v, tuple);
        Rat c(koszul_sign(v, tuple, perm));
        if (k % 2 != 0) c = -c;  // (−z)^k
        out += LaurentPoly::monomial(c, {"z"}, ExpVec{k});
    }
    if (twist) out = out * twist->at(cycle_type_of(perm));
    return out;
}

LaurentPoly permutation_action_trace(const ExplicitGradedSpace& v, unsigned n,
                                     const Partition& sigma, const ClassFunction* twist) {
    if (sigma.n() != n) throw std::invalid_argument("permutation_action_trace: cycle type of wrong size");
    return permutation_action_trace_explicit(v, canonical_permutation(sigma), twist);
}

std::size_t rational_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        Rat inv = Rat(1) / m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

LaurentPoly projector_rank(const ExplicitGradedSpace& v, unsigned n, const ClassFunction& twist) {
    if (twist.n() != n) throw std::invalid_argument("projector_rank: twist of wrong degree");
    check_size(v.dim(), n);

    auto tuples = all_tuples(v.dim(), n);
    // Group tuple indices by total degree; σ_* preserves the degree.
    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < tuples.size(); ++i) by_degree[total_degree(v, tuples[i])].push_back(i);
    std::map<std::vector<unsigned>, std::size_t> tuple_index;
    for (std::size_t i = 0; i < tuples.size(); ++i) tuple_index[tuples[i]] = i;

    // Averaging operator T = (1/n!)·Σ_σ χ_σ(twist)·σ_*, assembled per degree
    // block from every permutation of Σₙ.
    std::map<int, std::vector<std::vector<Rat>>> blocks;
    std::map<int, std::map<std::size_t, std::size_t>> local;
    for (const auto& [k, idxs] : by_degree) {
        blocks[k].assign(idxs.size(), std::vector<Rat>(idxs.size(), Rat(0)));
        for (std::size_t i = 0; i < idxs.size(); ++i) local[k][idxs[i]] = i;
    }

    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    Rat inv_fact = make_rat(1, factorial(n));
    do {
        Rat chi = twist.at(cycle_type_of(perm));
        if (chi == 0) continue;
        Rat weight = chi * inv_fact;
        for (std::size_t src = 0; src < tuples.size(); ++src) {
            const auto& t = tuples[src];
            // Image tuple u with u[perm[i]] = t[i].
            std::vector<unsigned> u(n);
            for (std::size_t i = 0; i < n; ++i) u[perm[i]] = t[i];
            int k = total_degree(v, t);
            std::size_t dst = tuple_index.at(u);
            blocks[k][local[k][dst]][local[k][src]] += weight * Rat(koszul_sign(v, t, perm));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Per degree: dimension of the Schur object = trace of the genuine
    // invariant projector = trace(T). When the twist is irreducible of
    // dimension d, d·T is idempotent and Gaussian rank cross-checks it.
    Rat dim = twist.dimension();
    LaurentPoly out({"z"}, {});
    for (const auto& [k, block] : blocks) {
        Rat trace = 0;
        std::size_t sz = block.size();
        for (std::size_t i = 0; i < sz; ++i) trace += block[i][i];

        if (dim > 0 && is_integer(dim)) {
            std::vector<std::vector<Rat>> scaled(sz, std::vector<Rat>(sz, Rat(0)));
            for (std::size_t i = 0; i < sz; ++i)
                for (std::size_t j = 0; j < sz; ++j) scaled[i][j] = block[i][j] * dim;
            bool idempotent = true;
            for (std::size_t i = 0; i < sz && idempotent; ++i)
                for (std::size_t j = 0; j < sz && idempotent; ++j) {
                    Rat acc = 0;
                    for (std::size_t l = 0; l < sz; ++l) acc += scaled[i][l] * scaled[l][j];
                    if (acc != scaled[i][j]) idempotent = false;
                }
            if (idempotent) {
                Rat expected = trace * dim;
                if (!is_integer(expected) || Rat(Int(rational_rank(scaled))) != expected)
                    throw std::logic_error("projector_rank: Gaussian rank disagrees with trace");
            }
        }

        Rat coeff = trace;
        if (k % 2 != 0) coeff = -coeff;  // (−z)^k
        out += LaurentPoly::monomial(coeff, {"z"}, ExpVec{k});
    }
    return out;
}

}  // namespace plethyra
