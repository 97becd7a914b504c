#include "plethyra/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace plethyra {

bool GradedLex::operator()(const ExpVec& a, const ExpVec& b) const {
    std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db) return da < db;
    return a < b;
}

LaurentPoly::LaurentPoly(const Rat& c) {
    if (c != 0) terms_[ExpVec{}] = c;
}

LaurentPoly::LaurentPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    for (const auto& [e, c] : terms_)
        if (e.size() != vars_.size())
            throw std::invalid_argument("LaurentPoly: exponent vector length mismatch");
    strip_zeros();
}

LaurentPoly LaurentPoly::variable(const std::string& name, std::int64_t exponent) {
    LaurentPoly p;
    p.vars_ = {name};
    p.terms_[ExpVec{exponent}] = 1;
    return p;
}

LaurentPoly LaurentPoly::monomial(const Rat& coeff, const std::vector<std::string>& vars,
                                  const ExpVec& exponents) {
    if (vars.size() != exponents.size())
        throw std::invalid_argument("LaurentPoly::monomial: length mismatch");
    LaurentPoly p;
    if (coeff == 0) return p;
    p.vars_ = vars;
    p.terms_[exponents] = coeff;
    return p;
}

bool LaurentPoly::is_constant() const {
    for (const auto& [e, c] : terms_)
        for (std::int64_t x : e)
            if (x != 0) return false;
    return true;
}

Rat LaurentPoly::constant_term() const {
    ExpVec zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat LaurentPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("LaurentPoly: not a constant");
    return constant_term();
}

void LaurentPoly::strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> merged = a;
    for (const auto& v : b)
        if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
    return merged;
}

LaurentPoly LaurentPoly::aligned(const std::vector<std::string>& new_vars) const {
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
        if (it == new_vars.end()) {
            // A variable may be dropped only if unused.
            for (const auto& [e, c] : terms_)
                if (e[i] != 0)
                    throw std::invalid_argument("LaurentPoly::aligned: missing used variable " + vars_[i]);
            pos[i] = std::size_t(-1);
        } else {
            pos[i] = static_cast<std::size_t>(it - new_vars.begin());
        }
    }
    TermMap terms;
    for (const auto& [e, c] : terms_) {
        ExpVec ne(new_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (pos[i] != std::size_t(-1)) ne[pos[i]] = e[i];
        terms[ne] += c;
    }
    LaurentPoly out(new_vars, std::move(terms));
    return out;
}

LaurentPoly LaurentPoly::pruned() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) vars.push_back(vars_[i]);
    return aligned(vars);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    if (this == &other) {
        for (auto& [e, c] : terms_) c *= 2;
        return *this;
    }
    if (vars_ != other.vars_) {
        auto merged = merge_vars(vars_, other.vars_);
        *this = aligned(merged);
        LaurentPoly rhs = other.aligned(merged);
        return *this += rhs;
    }
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    out += other;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    out -= other;
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    if (vars_ != other.vars_) {
        auto merged = merge_vars(vars_, other.vars_);
        return aligned(merged) * other.aligned(merged);
    }
    LaurentPoly out;
    out.vars_ = vars_;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            ExpVec e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            Rat prod = c1 * c2;
            auto [it, inserted] = out.terms_.emplace(std::move(e), prod);
            if (!inserted) it->second += prod;
        }
    }
    out.strip_zeros();
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly LaurentPoly::operator*(const Rat& scalar) const {
    LaurentPoly out;
    if (scalar == 0) return out;
    out.vars_ = vars_;
    out.terms_ = terms_;
    for (auto& [e, c] : out.terms_) c *= scalar;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result{Rat(1)};
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    if (vars_ == other.vars_) return terms_ == other.terms_;
    auto merged = merge_vars(vars_, other.vars_);
    return aligned(merged).terms_ == other.aligned(merged).terms_;
}

LaurentPoly LaurentPoly::adams(unsigned r) const {
    if (r == 0) throw std::invalid_argument("adams: r must be positive");
    if (r == 1) return *this;
    LaurentPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        ExpVec ne = e;
        for (std::int64_t& x : ne) x *= static_cast<std::int64_t>(r);
        out.terms_[ne] = c;
    }
    return out;
}

LaurentPoly LaurentPoly::specialize(const std::map<std::string, LaurentPoly>& assignment) const {
    // Split variables into substituted and kept ones.
    std::vector<std::string> kept;
    std::vector<const LaurentPoly*> values(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignment.find(vars_[i]);
        if (it != assignment.end())
            values[i] = &it->second;
        else
            kept.push_back(vars_[i]);
    }

    LaurentPoly result;
    for (const auto& [e, c] : terms_) {
        ExpVec kept_exp;
        kept_exp.reserve(kept.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (!values[i]) kept_exp.push_back(e[i]);
        LaurentPoly term = LaurentPoly::monomial(c, kept, kept_exp);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!values[i] || e[i] == 0) continue;
            std::int64_t exp = e[i];
            const LaurentPoly& v = *values[i];
            if (exp > 0) {
                term *= v.pow(static_cast<unsigned>(exp));
            } else {
                // Need v invertible: a nonzero constant or a single unit monomial.
                if (v.terms_.size() != 1)
                    throw std::domain_error("specialize: non-invertible value for negative exponent of " +
                                            vars_[i]);
                const auto& [ve, vc] = *v.terms_.begin();
                if (vc != 1 && vc != -1) {
                    bool pure_const = true;
                    for (std::int64_t x : ve)
                        if (x != 0) pure_const = false;
                    if (!pure_const)
                        throw std::domain_error(
                            "specialize: non-invertible value for negative exponent of " + vars_[i]);
                }
                ExpVec inv_e = ve;
                for (std::int64_t& x : inv_e) x = -x;
                Rat inv_c = make_rat(vc.get_den(), vc.get_num());
                LaurentPoly inv = LaurentPoly::monomial(inv_c, v.vars_, inv_e);
                term *= inv.pow(static_cast<unsigned>(-exp));
            }
        }
        result += term;
    }
    return result;
}

LaurentPoly LaurentPoly::specialize(const std::string& var, const LaurentPoly& value) const {
    return specialize(std::map<std::string, LaurentPoly>{{var, value}});
}

LaurentPoly from_betti(const std::map<int, Int>& betti) {
    LaurentPoly out({"z"}, {});
    for (const auto& [k, b] : betti) {
        if (b < 0) throw std::invalid_argument("from_betti: negative Betti number");
        if (b == 0) continue;
        Rat coeff(b);
        if (k % 2 != 0) coeff = -coeff;  // (−z)^k
        out += LaurentPoly::monomial(coeff, {"z"}, ExpVec{k});
    }
    return out;
}

LaurentPoly from_hodge(const std::vector<HodgeEntry>& entries) {
    const std::vector<std::string> yxz = {"y", "x", "z"};
    LaurentPoly out(yxz, {});
    for (const auto& h : entries) {
        if (h.dim < 0) throw std::invalid_argument("from_hodge: negative Hodge number");
        if (h.dim == 0) continue;
        Rat coeff(h.dim);
        if (h.k % 2 != 0) coeff = -coeff;  // (−z)^k
        out += LaurentPoly::monomial(coeff, yxz, ExpVec{h.p, h.q, h.k});
    }
    return out;
}

}  // namespace plethyra
