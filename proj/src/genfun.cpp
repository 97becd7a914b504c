#include "plethyra/genfun.hpp"

#include <stdexcept>

namespace plethyra {

TruncatedSeries char_series(const SpaceDescriptor& x, unsigned max_degree) {
    SymFunc seed = SymFunc::p(1u) * x.poly;
    return plethystic_exp(TruncatedSeries::term(max_degree, 1, seed));
}

SymFunc twisted_character(const ClassFunction& v, const SpaceDescriptor& x) {
    SymFunc::TermMap terms;
    for (const auto& lambda : partitions_of(v.n())) {
        LaurentPoly c{v.at(lambda) / Rat(stabilizer_order(lambda))};
        for (const auto& [r, k] : lambda.mults()) c *= x.poly.adams(r).pow(k);
        if (!c.is_zero()) terms[lambda] = std::move(c);
    }
    return SymFunc(std::move(terms));
}

LaurentPoly schur_value(const ClassFunction& v, const SpaceDescriptor& x) {
    return twisted_character(v, x).specialize_p_ones();
}

std::map<Partition, LaurentPoly> schur_decomposition(const SpaceDescriptor& x, unsigned n) {
    SymFunc cln = char_series(x, n).at(n);
    std::map<Partition, LaurentPoly> result;
    for (const auto& mu : partitions_of(n))
        result[mu] = cln.internal_product(schur(mu)).specialize_p_ones();
    return result;
}

namespace {

// exp(Σ_r w_r·ψ_r(P)·t^r/r) with scalar weights w_r.
TruncatedSeries weighted_exp(const LaurentPoly& p, unsigned max_degree,
                             const std::function<Rat(unsigned)>& weight) {
    TruncatedSeries inner(max_degree);
    for (unsigned r = 1; r <= max_degree; ++r) {
        Rat w = weight(r) / Rat(r);
        if (w == 0) continue;
        inner.set(r, SymFunc{p.adams(r)} * w);
    }
    return exp(inner);
}

}  // namespace

TruncatedSeries macdonald_series(const SpaceDescriptor& x, unsigned max_degree) {
    return weighted_exp(x.poly, max_degree, [](unsigned) { return Rat(1); });
}

TruncatedSeries alternating_series(const SpaceDescriptor& x, unsigned max_degree) {
    return weighted_exp(x.poly, max_degree,
                        [](unsigned r) { return Rat(r % 2 == 1 ? 1 : -1); });
}

TruncatedSeries kunneth_series(const SpaceDescriptor& x, unsigned max_degree) {
    return weighted_exp(x.poly, max_degree, [](unsigned r) { return Rat(r == 1 ? 1 : 0); });
}

LaurentPoly quotient_polynomial(const SubgroupProfile& k, const SpaceDescriptor& x) {
    return schur_value(induced_trivial_character(k), x);
}

TruncatedSeries configuration_series(const SpaceDescriptor& x, unsigned max_degree) {
    TruncatedSeries base = TruncatedSeries::one(max_degree) +
                           TruncatedSeries::term(max_degree, 1, SymFunc::p(1u));
    return plethystic_exp(plethystic_log(base) * x.poly);
}

TruncatedSeries hilbert_series(const SpaceDescriptor& x, const TruncatedSeries& punctual,
                               unsigned max_degree, HilbertMode mode) {
    if (!(punctual.at(0) == SymFunc{Rat(1)}))
        throw std::domain_error("hilbert_series: punctual series must start at 1");
    unsigned bound = std::min(max_degree, punctual.max_degree());
    TruncatedSeries base(bound);
    base.set(0, SymFunc{Rat(1)});
    for (unsigned i = 1; i <= bound; ++i) {
        const SymFunc& c = punctual.at(i);
        if (c.is_zero()) continue;
        if (!c.is_scalar())
            throw std::invalid_argument("hilbert_series: punctual coefficients must be scalars");
        LaurentPoly ci = c.coefficient(Partition());
        base.set(i, mode == HilbertMode::ordered ? h_basis(i) * ci : SymFunc{ci});
    }
    return power_structure(base, x.poly);
}

}  // namespace plethyra
