#include "plethyra/equivariant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace plethyra {

RatMatrix mat_identity(std::size_t n) {
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void check_square(const RatMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("matrix must be square");
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("mat_mul: size mismatch");
    RatMatrix c(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

RatMatrix mat_pow(const RatMatrix& m, unsigned r) {
    check_square(m);
    RatMatrix result = mat_identity(m.size());
    RatMatrix base = m;
    while (r > 0) {
        if (r & 1u) result = mat_mul(result, base);
        base = mat_mul(base, base);
        r >>= 1u;
    }
    return result;
}

Rat mat_trace(const RatMatrix& m) {
    check_square(m);
    Rat t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

void GradedEndomorphism::validate() const {
    for (const auto& [k, m] : blocks) check_square(m);
}

GradedEndomorphism endo_power(const GradedEndomorphism& g, unsigned r) {
    if (r == 0) throw std::invalid_argument("endo_power: r must be positive");
    GradedEndomorphism out;
    for (const auto& [k, m] : g.blocks) out.blocks[k] = mat_pow(m, r);
    return out;
}

LaurentPoly graded_trace_poly(const GradedEndomorphism& g) {
    g.validate();
    LaurentPoly out({"z"}, {});
    for (const auto& [k, m] : g.blocks) {
        Rat t = mat_trace(m);
        if (k % 2 != 0) t = -t;  // (−z)^k
        out += LaurentPoly::monomial(t, {"z"}, ExpVec{k});
    }
    return out;
}

namespace {

void strip_trailing_zeros(std::vector<Rat>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    strip_trailing_zeros(c);
    return c;
}

// Remainder of a by b; both over Q, b nonzero.
std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
    strip_trailing_zeros(a);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        Rat factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        strip_trailing_zeros(a);
        if (a.size() == 1 && a[0] == 0) break;
        if (a.size() >= b.size() && a.back() == 0) strip_trailing_zeros(a);
    }
    return a;
}

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    strip_trailing_zeros(a);
    strip_trailing_zeros(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        std::vector<Rat> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact division, used only when the divisor is a known factor.
std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
    strip_trailing_zeros(a);
    if (a.size() == 1 && a[0] == 0) return a;
    std::vector<Rat> q(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        Rat factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        strip_trailing_zeros(a);
        if (a.size() == 1 && a[0] == 0) break;
    }
    if (!(a.size() == 1 && a[0] == 0)) throw std::logic_error("poly_div_exact: not a factor");
    strip_trailing_zeros(q);
    return q;
}

}  // namespace

RationalFunctionSeries::RationalFunctionSeries() : num_{Rat(1)}, den_{Rat(1)} {}

RationalFunctionSeries::RationalFunctionSeries(std::vector<Rat> numerator,
                                               std::vector<Rat> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_.empty() || den_.empty() || num_[0] != 1 || den_[0] != 1)
        throw std::invalid_argument("RationalFunctionSeries: constant terms must be 1");
    normalize();
}

void RationalFunctionSeries::normalize() {
    strip_trailing_zeros(num_);
    strip_trailing_zeros(den_);
    std::vector<Rat> g = poly_gcd(num_, den_);
    if (g.size() > 1) {
        // g(0) ≠ 0 since num(0) = den(0) = 1; rescale to constant term 1.
        if (g[0] == 0) throw std::logic_error("RationalFunctionSeries: zero gcd constant term");
        Rat inv = Rat(1) / g[0];
        for (Rat& c : g) c *= inv;
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
}

RationalFunctionSeries RationalFunctionSeries::operator*(const RationalFunctionSeries& other) const {
    return RationalFunctionSeries(poly_mul(num_, other.num_), poly_mul(den_, other.den_));
}

bool RationalFunctionSeries::operator==(const RationalFunctionSeries& other) const {
    // gcd-normalized with constant term 1, so representations are canonical
    return num_ == other.num_ && den_ == other.den_;
}

std::vector<Rat> RationalFunctionSeries::expand(unsigned n) const {
    std::vector<Rat> out(n + 1, Rat(0));
    // out = num · den^{-1}; reciprocal by the b_k recursion.
    std::vector<Rat> inv(n + 1, Rat(0));
    inv[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        Rat acc = 0;
        for (unsigned j = 1; j <= k && j < den_.size(); ++j) acc += den_[j] * inv[k - j];
        inv[k] = -acc;
    }
    for (unsigned i = 0; i <= n && i < num_.size(); ++i)
        for (unsigned j = 0; i + j <= n; ++j) out[i + j] += num_[i] * inv[j];
    return out;
}

std::vector<Rat> det_one_minus_t(const RatMatrix& m) {
    check_square(m);
    std::size_t n = m.size();
    // Newton: k·e_k = Σ_{j=1}^{k} (−1)^{j−1} e_{k−j} s_j with s_j = tr(M^j).
    std::vector<Rat> s(n + 1, Rat(0));
    RatMatrix power = mat_identity(n);
    for (std::size_t j = 1; j <= n; ++j) {
        power = mat_mul(power, m);
        s[j] = mat_trace(power);
    }
    std::vector<Rat> e(n + 1, Rat(0));
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            Rat term = e[k - j] * s[j];
            acc += (j % 2 == 1) ? term : -term;
        }
        e[k] = acc / Rat(static_cast<long>(k));
    }
    std::vector<Rat> det(n + 1, Rat(0));
    for (std::size_t k = 0; k <= n; ++k) det[k] = (k % 2 == 0) ? e[k] : -e[k];
    strip_trailing_zeros(det);
    return det;
}

std::vector<Rat> det_one_plus_t(const RatMatrix& m) {
    std::vector<Rat> det = det_one_minus_t(m);
    for (std::size_t k = 1; k < det.size(); k += 2) det[k] = -det[k];
    return det;
}

RationalFunctionSeries l_function(const RatMatrix& m) {
    return RationalFunctionSeries({Rat(1)}, det_one_minus_t(m));
}

RationalFunctionSeries char_poly_lambda(const RatMatrix& m) {
    return RationalFunctionSeries(det_one_plus_t(m), {Rat(1)});
}

TruncatedSeries lefschetz_zeta(const GradedEndomorphism& g, unsigned max_degree, bool graded) {
    g.validate();

    // Route 1: exp(Σ_r P^{g^r}(z^r)·t^r/r).
    TruncatedSeries inner(max_degree);
    for (unsigned r = 1; r <= max_degree; ++r) {
        LaurentPoly p = graded_trace_poly(endo_power(g, r)).adams(r);
        if (!graded) p = p.specialize("z", LaurentPoly(Rat(1)));
        inner.set(r, SymFunc{p} * make_rat(1, r));
    }
    TruncatedSeries exp_form = exp(inner);

    // Route 2: ∏_k L(H^k,g)(z^k·t)^{(−1)^k}, assembled as an even/odd
    // quotient of characteristic polynomials.
    auto lift = [&](const std::vector<Rat>& poly, int k) {
        TruncatedSeries s(max_degree);
        for (unsigned i = 0; i < poly.size() && i <= max_degree; ++i) {
            if (poly[i] == 0) continue;
            LaurentPoly c = graded ? LaurentPoly::monomial(poly[i], {"z"},
                                                           ExpVec{static_cast<std::int64_t>(k) * i})
                                   : LaurentPoly(poly[i]);
            s.set(i, SymFunc{c});
        }
        return s;
    };
    TruncatedSeries numerator = TruncatedSeries::one(max_degree);
    TruncatedSeries denominator = TruncatedSeries::one(max_degree);
    for (const auto& [k, m] : g.blocks) {
        TruncatedSeries factor = lift(det_one_minus_t(m), k);
        if (k % 2 == 0)
            denominator = denominator * factor;
        else
            numerator = numerator * factor;
    }
    TruncatedSeries product_form = numerator * denominator.reciprocal();

    if (!(exp_form == product_form))
        throw std::logic_error("lefschetz_zeta: exp form and L-function product disagree");
    return exp_form;
}

void FiniteGroupData::validate() const {
    if (order <= 0) throw std::invalid_argument("FiniteGroupData: order must be positive");
    Int sum = 0;
    std::map<std::string, const GroupClass*> by_name;
    for (const auto& c : classes) {
        if (c.size <= 0) throw std::invalid_argument("FiniteGroupData: class sizes must be positive");
        if (!by_name.emplace(c.name, &c).second)
            throw std::invalid_argument("FiniteGroupData: duplicate class name " + c.name);
        sum += c.size;
    }
    if (sum != order) throw std::invalid_argument("FiniteGroupData: class sizes do not sum to order");
    for (const auto& c : classes) {
        for (const auto& [r, target] : c.power_maps) {
            if (r == 0) throw std::invalid_argument("FiniteGroupData: power map exponent 0");
            if (!by_name.count(target))
                throw std::invalid_argument("FiniteGroupData: power map target " + target +
                                            " is not a class");
            if (r == 1 && target != c.name)
                throw std::invalid_argument("FiniteGroupData: power_maps[1] must be the identity map");
        }
    }
    // Composition consistency on declared entries: (g^r)^s must land where
    // g^{rs} is declared to land.
    for (const auto& c : classes)
        for (const auto& [r, cr] : c.power_maps)
            for (const auto& [s, crs] : by_name.at(cr)->power_maps) {
                auto it = c.power_maps.find(r * s);
                if (it != c.power_maps.end() && it->second != crs)
                    throw std::invalid_argument("FiniteGroupData: inconsistent power maps at class " +
                                                c.name);
            }
}

const GroupClass& FiniteGroupData::class_by_name(const std::string& name) const {
    for (const auto& c : classes)
        if (c.name == name) return c;
    throw std::invalid_argument("FiniteGroupData: no class named " + name);
}

std::string FiniteGroupData::power_class(const std::string& name, unsigned r) const {
    if (r == 0) throw std::invalid_argument("power_class: r must be positive");
    if (r == 1) return name;
    const GroupClass& c = class_by_name(name);
    auto it = c.power_maps.find(r);
    if (it != c.power_maps.end()) return it->second;
    // Compose declared maps along a factorization r = d·(r/d).
    for (unsigned d = 2; d < r; ++d) {
        if (r % d != 0) continue;
        if (!c.power_maps.count(d)) continue;
        try {
            return power_class(c.power_maps.at(d), r / d);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::invalid_argument("FiniteGroupData: missing power map r=" + std::to_string(r) +
                                " for class " + name);
}

std::map<std::string, TruncatedSeries> group_macdonald(
    const FiniteGroupData& g, const std::map<std::string, LaurentPoly>& h, unsigned max_degree) {
    g.validate();
    for (const auto& c : g.classes)
        if (!h.count(c.name))
            throw std::invalid_argument("group_macdonald: h is missing class " + c.name);

    std::map<std::string, TruncatedSeries> out;
    for (const auto& c : g.classes) {
        TruncatedSeries inner(max_degree);
        for (unsigned r = 1; r <= max_degree; ++r) {
            LaurentPoly value = h.at(g.power_class(c.name, r)).adams(r);
            inner.set(r, SymFunc{value} * make_rat(1, r));
        }
        out.emplace(c.name, exp(inner));
    }
    return out;
}

RootOfUnityElement RootOfUnityElement::root(unsigned long a, unsigned long q, Int mult) {
    if (q == 0) throw std::invalid_argument("RootOfUnityElement: zero order");
    a %= q;
    unsigned long g = std::gcd(a, q);
    if (a == 0) {
        q = 1;
    } else {
        a /= g;
        q /= g;
    }
    RootOfUnityElement x;
    if (mult != 0) x.terms_[{a, q}] = mult;
    return x;
}

void RootOfUnityElement::add_term(Fraction f, const Int& mult) {
    auto [it, inserted] = terms_.emplace(f, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

RootOfUnityElement RootOfUnityElement::operator+(const RootOfUnityElement& other) const {
    RootOfUnityElement out = *this;
    for (const auto& [f, m] : other.terms_) out.add_term(f, m);
    return out;
}

RootOfUnityElement RootOfUnityElement::operator*(const RootOfUnityElement& other) const {
    RootOfUnityElement out;
    for (const auto& [f1, m1] : terms_)
        for (const auto& [f2, m2] : other.terms_) {
            // e^{2πi a/q}·e^{2πi b/p} = e^{2πi (ap+bq)/(qp)}.
            unsigned long q = f1.second, p = f2.second;
            unsigned long num = f1.first * p + f2.first * q;
            RootOfUnityElement t = root(num, q * p, m1 * m2);
            for (const auto& [f, m] : t.terms_) out.add_term(f, m);
        }
    return out;
}

RootOfUnityElement mu_adams(const RootOfUnityElement& x, unsigned r) {
    if (r == 0) throw std::invalid_argument("mu_adams: r must be positive");
    RootOfUnityElement out;
    for (const auto& [f, m] : x.terms()) {
        RootOfUnityElement t = RootOfUnityElement::root(f.first * r, f.second, m);
        for (const auto& [nf, nm] : t.terms()) out = out + RootOfUnityElement::root(nf.first, nf.second, nm);
    }
    return out;
}

}  // namespace plethyra
