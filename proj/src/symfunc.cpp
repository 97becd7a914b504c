#include "plethyra/symfunc.hpp"

#include <stdexcept>

namespace plethyra {

SymFunc::SymFunc(const LaurentPoly& constant) {
    if (!constant.is_zero()) terms_[Partition()] = constant;
}

SymFunc::SymFunc(const Rat& constant) : SymFunc(LaurentPoly(constant)) {}

SymFunc::SymFunc(TermMap terms) : terms_(std::move(terms)) { strip_zeros(); }

SymFunc SymFunc::p(const Partition& lambda) {
    SymFunc f;
    f.terms_[lambda] = LaurentPoly(Rat(1));
    return f;
}

SymFunc SymFunc::p(unsigned r) {
    if (r == 0) throw std::invalid_argument("SymFunc::p: r must be positive");
    return p(Partition({r}));
}

bool SymFunc::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

LaurentPoly SymFunc::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

unsigned SymFunc::degree() const {
    unsigned d = 0;
    for (const auto& [l, c] : terms_) d = std::max(d, l.n());
    return d;
}

SymFunc SymFunc::homogeneous_part(unsigned n) const {
    TermMap out;
    for (const auto& [l, c] : terms_)
        if (l.n() == n) out[l] = c;
    return SymFunc(std::move(out));
}

bool SymFunc::is_homogeneous(unsigned n) const {
    for (const auto& [l, c] : terms_)
        if (l.n() != n) return false;
    return true;
}

SymFunc SymFunc::truncated(unsigned bound) const {
    TermMap out;
    for (const auto& [l, c] : terms_)
        if (l.n() <= bound) out[l] = c;
    return SymFunc(std::move(out));
}

void SymFunc::strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    if (this == &other) {
        for (auto& [l, c] : terms_) c = c * Rat(2);
        return *this;
    }
    for (const auto& [l, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(l, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) { return *this += -other; }

SymFunc SymFunc::operator+(const SymFunc& other) const {
    SymFunc out = *this;
    out += other;
    return out;
}

SymFunc SymFunc::operator-(const SymFunc& other) const {
    SymFunc out = *this;
    out -= other;
    return out;
}

SymFunc SymFunc::operator-() const {
    SymFunc out = *this;
    for (auto& [l, c] : out.terms_) c = -c;
    return out;
}

SymFunc SymFunc::operator*(const SymFunc& other) const {
    SymFunc out;
    for (const auto& [l1, c1] : terms_)
        for (const auto& [l2, c2] : other.terms_) {
            Partition l = l1.merged(l2);
            LaurentPoly prod = c1 * c2;
            auto [it, inserted] = out.terms_.emplace(std::move(l), prod);
            if (!inserted) it->second += prod;
        }
    out.strip_zeros();
    return out;
}

SymFunc SymFunc::operator*(const LaurentPoly& scalar) const {
    SymFunc out;
    if (scalar.is_zero()) return out;
    for (const auto& [l, c] : terms_) out.terms_[l] = c * scalar;
    out.strip_zeros();
    return out;
}

SymFunc SymFunc::operator*(const Rat& scalar) const { return *this * LaurentPoly(scalar); }

bool SymFunc::operator==(const SymFunc& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

SymFunc SymFunc::internal_product(const SymFunc& other) const {
    SymFunc out;
    for (const auto& [l, c1] : terms_) {
        auto it = other.terms_.find(l);
        if (it == other.terms_.end()) continue;
        LaurentPoly c = c1 * it->second * Rat(stabilizer_order(l));
        if (!c.is_zero()) out.terms_[l] = std::move(c);
    }
    return out;
}

SymFunc SymFunc::adams_twist(unsigned r) const {
    if (r == 0) throw std::invalid_argument("adams_twist: r must be positive");
    if (r == 1) return *this;
    SymFunc out;
    for (const auto& [l, c] : terms_) out.terms_[l.scaled(r)] = c.adams(r);
    return out;
}

SymFunc SymFunc::map_coefficients(const std::function<LaurentPoly(const LaurentPoly&)>& fn) const {
    TermMap out;
    for (const auto& [l, c] : terms_) out[l] = fn(c);
    return SymFunc(std::move(out));
}

LaurentPoly SymFunc::specialize_p(const std::function<LaurentPoly(unsigned)>& rule) const {
    LaurentPoly out;
    for (const auto& [l, c] : terms_) {
        LaurentPoly term = c;
        for (const auto& [r, k] : l.mults()) term *= rule(r).pow(k);
        out += term;
    }
    return out;
}

LaurentPoly SymFunc::specialize_p_ones() const {
    return specialize_p([](unsigned) { return LaurentPoly(Rat(1)); });
}

LaurentPoly SymFunc::specialize_p_alternating() const {
    return specialize_p([](unsigned r) { return LaurentPoly(Rat(r % 2 == 1 ? 1 : -1)); });
}

LaurentPoly SymFunc::specialize_p_forget() const {
    return specialize_p([](unsigned r) { return LaurentPoly(Rat(r == 1 ? 1 : 0)); });
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g, int max_degree) {
    // Cache the twisted inner series ψ_r(g) with p_j ↦ p_{rj}, per part size r.
    std::map<unsigned, SymFunc> twisted;
    auto inner = [&](unsigned r) -> const SymFunc& {
        auto it = twisted.find(r);
        if (it == twisted.end()) {
            SymFunc t = g.adams_twist(r);
            if (max_degree >= 0) t = t.truncated(static_cast<unsigned>(max_degree));
            it = twisted.emplace(r, std::move(t)).first;
        }
        return it->second;
    };

    SymFunc result;
    for (const auto& [lambda, coeff] : f.terms()) {
        SymFunc term{coeff};
        for (const auto& [r, k] : lambda.mults())
            for (unsigned i = 0; i < k; ++i) {
                term = term * inner(r);
                if (max_degree >= 0) term = term.truncated(static_cast<unsigned>(max_degree));
            }
        result += term;
    }
    if (max_degree >= 0) result = result.truncated(static_cast<unsigned>(max_degree));
    return result;
}

SymFunc h_basis(unsigned n) {
    SymFunc::TermMap terms;
    for (const auto& lambda : partitions_of(n))
        terms[lambda] = LaurentPoly(make_rat(1, stabilizer_order(lambda)));
    return SymFunc(std::move(terms));
}

SymFunc e_basis(unsigned n) {
    SymFunc::TermMap terms;
    for (const auto& lambda : partitions_of(n)) {
        Rat c = make_rat(cycle_type_sign(lambda), stabilizer_order(lambda));
        terms[lambda] = LaurentPoly(c);
    }
    return SymFunc(std::move(terms));
}

SymFunc schur(const Partition& mu) { return frobenius_char(irreducible_character(mu)); }

SymFunc h_basis(const Partition& lambda) {
    SymFunc out{Rat(1)};
    for (unsigned part : lambda.parts()) out = out * h_basis(part);
    return out;
}

SymFunc e_basis(const Partition& lambda) {
    SymFunc out{Rat(1)};
    for (unsigned part : lambda.parts()) out = out * e_basis(part);
    return out;
}

SymFunc frobenius_char(const ClassFunction& v) {
    SymFunc::TermMap terms;
    for (const auto& [lambda, chi] : v.values()) {
        if (chi == 0) continue;
        terms[lambda] = LaurentPoly(chi / Rat(stabilizer_order(lambda)));
    }
    return SymFunc(std::move(terms));
}

}  // namespace plethyra
