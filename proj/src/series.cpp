#include "plethyra/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace plethyra {

TruncatedSeries::TruncatedSeries(unsigned max_degree)
    : max_degree_(max_degree), coeffs_(max_degree + 1) {}

TruncatedSeries::TruncatedSeries(unsigned max_degree, std::vector<SymFunc> coeffs)
    : max_degree_(max_degree), coeffs_(std::move(coeffs)) {
    coeffs_.resize(max_degree_ + 1);
}

TruncatedSeries TruncatedSeries::one(unsigned max_degree) {
    TruncatedSeries s(max_degree);
    s.coeffs_[0] = SymFunc{Rat(1)};
    return s;
}

TruncatedSeries TruncatedSeries::term(unsigned max_degree, unsigned k, const SymFunc& c) {
    TruncatedSeries s(max_degree);
    if (k <= max_degree) s.coeffs_[k] = c;
    return s;
}

const SymFunc& TruncatedSeries::at(unsigned n) const {
    if (n > max_degree_) throw std::out_of_range("TruncatedSeries::at: beyond truncation");
    return coeffs_[n];
}

void TruncatedSeries::set(unsigned n, SymFunc c) {
    if (n > max_degree_) throw std::out_of_range("TruncatedSeries::set: beyond truncation");
    coeffs_[n] = std::move(c);
}

TruncatedSeries TruncatedSeries::truncated(unsigned bound) const {
    TruncatedSeries out(std::min(bound, max_degree_));
    for (unsigned n = 0; n <= out.max_degree_; ++n) out.coeffs_[n] = coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    unsigned bound = std::min(max_degree_, other.max_degree_);
    TruncatedSeries out(bound);
    for (unsigned n = 0; n <= bound; ++n) out.coeffs_[n] = coeffs_[n] + other.coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    unsigned bound = std::min(max_degree_, other.max_degree_);
    TruncatedSeries out(bound);
    for (unsigned n = 0; n <= bound; ++n) out.coeffs_[n] = coeffs_[n] - other.coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(max_degree_);
    for (unsigned n = 0; n <= max_degree_; ++n) out.coeffs_[n] = -coeffs_[n];
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    unsigned bound = std::min(max_degree_, other.max_degree_);
    TruncatedSeries out(bound);
    for (unsigned i = 0; i <= bound; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= bound; ++j) {
            if (other.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const SymFunc& scalar) const {
    TruncatedSeries out(max_degree_);
    for (unsigned n = 0; n <= max_degree_; ++n) out.coeffs_[n] = coeffs_[n] * scalar;
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const LaurentPoly& scalar) const {
    return *this * SymFunc{scalar};
}

TruncatedSeries TruncatedSeries::operator*(const Rat& scalar) const {
    return *this * SymFunc{scalar};
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
    if (max_degree_ != other.max_degree_) return false;
    return coeffs_ == other.coeffs_;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (!(coeffs_[0] == SymFunc{Rat(1)}))
        throw std::domain_error("TruncatedSeries::reciprocal: constant term must be 1");
    TruncatedSeries out = one(max_degree_);
    for (unsigned n = 1; n <= max_degree_; ++n) {
        SymFunc acc;
        for (unsigned k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
        out.coeffs_[n] = -acc;
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(long e) const {
    TruncatedSeries base = e < 0 ? reciprocal() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    TruncatedSeries result = one(max_degree_);
    while (k > 0) {
        if (k & 1ul) result = result * base;
        base = base * base;
        k >>= 1ul;
    }
    return result;
}

TruncatedSeries exp(const TruncatedSeries& s) {
    if (!s.at(0).is_zero()) throw std::domain_error("exp: nonzero constant term");
    unsigned N = s.max_degree();
    TruncatedSeries out = TruncatedSeries::one(N);
    // E' = s'·E gives n·E_n = Σ_{k=1}^n k·s_k·E_{n−k}.
    for (unsigned n = 1; n <= N; ++n) {
        SymFunc acc;
        for (unsigned k = 1; k <= n; ++k) acc += s.at(k) * Rat(k) * out.at(n - k);
        out.set(n, acc * make_rat(1, n));
    }
    return out;
}

TruncatedSeries log(const TruncatedSeries& s) {
    if (!(s.at(0) == SymFunc{Rat(1)})) throw std::domain_error("log: constant term must be 1");
    unsigned N = s.max_degree();
    TruncatedSeries out(N);
    // n·s_n = Σ_{k=1}^n k·L_k·s_{n−k} solved for L_n.
    for (unsigned n = 1; n <= N; ++n) {
        SymFunc acc;
        for (unsigned k = 1; k < n; ++k) acc += out.at(k) * Rat(k) * s.at(n - k);
        out.set(n, s.at(n) - acc * make_rat(1, n));
    }
    return out;
}

TruncatedSeries plethystic_exp(const TruncatedSeries& s) {
    if (!s.at(0).is_zero()) throw std::domain_error("plethystic_exp: nonzero constant term");
    unsigned N = s.max_degree();
    TruncatedSeries inner(N);
    for (unsigned r = 1; r <= N; ++r) {
        Rat inv_r = make_rat(1, r);
        for (unsigned n = 1; n * r <= N; ++n) {
            if (s.at(n).is_zero()) continue;
            SymFunc twisted = s.at(n).adams_twist(r) * inv_r;
            inner.set(n * r, inner.at(n * r) + twisted);
        }
    }
    return exp(inner);
}

TruncatedSeries plethystic_log(const TruncatedSeries& s) {
    if (!(s.at(0) == SymFunc{Rat(1)}))
        throw std::domain_error("plethystic_log: constant term must be 1");
    unsigned N = s.max_degree();
    TruncatedSeries l = log(s);
    // L_m = Σ_{r|m} (1/r)·Ψ_r(c_{m/r}) solved for c_m top down in m.
    TruncatedSeries out(N);
    for (unsigned m = 1; m <= N; ++m) {
        SymFunc acc = l.at(m);
        for (unsigned r = 2; r <= m; ++r) {
            if (m % r != 0) continue;
            acc -= out.at(m / r).adams_twist(r) * make_rat(1, r);
        }
        out.set(m, std::move(acc));
    }
    return out;
}

TruncatedSeries power_structure(const TruncatedSeries& base, const LaurentPoly& exponent) {
    if (!(base.at(0) == SymFunc{Rat(1)}))
        throw std::domain_error("power_structure: constant term must be 1");
    return plethystic_exp(plethystic_log(base) * exponent);
}

}  // namespace plethyra
