#include <doctest.h>

#include "plethyra/series.hpp"

using namespace plethyra;

namespace {

TruncatedSeries all_ones(unsigned n) {
    TruncatedSeries s(n);
    for (unsigned i = 0; i <= n; ++i) s.set(i, SymFunc{Rat(1)});
    return s;
}

}  // namespace

TEST_CASE("exp and log basics") {
    CHECK(exp(TruncatedSeries(5)) == TruncatedSeries::one(5));
    // exp(sum t^r/r) is the geometric series.
    TruncatedSeries s(8);
    for (unsigned r = 1; r <= 8; ++r) s.set(r, SymFunc{make_rat(1, r)});
    CHECK(exp(s) == all_ones(8));
    // Mercator: log(1+t) = t - t^2/2 + t^3/3 - ...
    TruncatedSeries one_plus_t = TruncatedSeries::one(6) + TruncatedSeries::term(6, 1, SymFunc{Rat(1)});
    TruncatedSeries l = log(one_plus_t);
    for (unsigned n = 1; n <= 6; ++n) {
        Rat expected = make_rat(n % 2 == 1 ? 1 : -1, n);
        CHECK(l.at(n) == SymFunc{expected});
    }
    CHECK_THROWS_AS(exp(one_plus_t), std::domain_error);
    CHECK_THROWS_AS(log(TruncatedSeries(4)), std::domain_error);
}

TEST_CASE("plethystic exponential examples") {
    // Exp(t) with unit coefficient is the geometric series.
    TruncatedSeries t = TruncatedSeries::term(8, 1, SymFunc{Rat(1)});
    CHECK(plethystic_exp(t) == all_ones(8));
    // Exp(-t) = 1 - t.
    TruncatedSeries expected = TruncatedSeries::one(8) - t;
    CHECK(plethystic_exp(-t) == expected);
    // Exp(P·p1·t) = exp(sum psi_r(P)·p_r·t^r/r).
    LaurentPoly p = LaurentPoly(Rat(1)) + LaurentPoly::variable("z", 2) -
                    LaurentPoly::variable("z", -1) * Rat(2);
    TruncatedSeries seed = TruncatedSeries::term(6, 1, SymFunc::p(1u) * p);
    TruncatedSeries inner(6);
    for (unsigned r = 1; r <= 6; ++r)
        inner.set(r, SymFunc::p(r) * (p.adams(r) * make_rat(1, r)));
    CHECK(plethystic_exp(seed) == exp(inner));
    CHECK_THROWS_AS(plethystic_exp(TruncatedSeries::one(4)), std::domain_error);
}

TEST_CASE("plethystic logarithm inverts Exp") {
    CHECK(plethystic_log(TruncatedSeries::one(6)) == TruncatedSeries(6));
    CHECK(plethystic_log(all_ones(8)) == TruncatedSeries::term(8, 1, SymFunc{Rat(1)}));
    TruncatedSeries one_plus_t =
        TruncatedSeries::one(8) + TruncatedSeries::term(8, 1, SymFunc{Rat(1)});
    CHECK(plethystic_exp(plethystic_log(one_plus_t)) == one_plus_t);
    CHECK_THROWS_AS(plethystic_log(TruncatedSeries(4)), std::domain_error);
}

TEST_CASE("power structure") {
    TruncatedSeries one_plus_t =
        TruncatedSeries::one(4) + TruncatedSeries::term(4, 1, SymFunc{Rat(1)});
    CHECK(power_structure(one_plus_t, LaurentPoly()) == TruncatedSeries::one(4));
    TruncatedSeries cubed = power_structure(one_plus_t, LaurentPoly(Rat(3)));
    CHECK(cubed.at(0) == SymFunc{Rat(1)});
    CHECK(cubed.at(1) == SymFunc{Rat(3)});
    CHECK(cubed.at(2) == SymFunc{Rat(3)});
    CHECK(cubed.at(3) == SymFunc{Rat(1)});
    CHECK(cubed.at(4).is_zero());
    CHECK_THROWS_AS(power_structure(TruncatedSeries(3), LaurentPoly(Rat(1))), std::domain_error);
}

TEST_CASE("ring structure and truncation") {
    TruncatedSeries a(5), b(3);
    a.set(2, SymFunc::p(1u));
    b.set(1, SymFunc{Rat(2)});
    TruncatedSeries prod = a * b;
    CHECK(prod.max_degree() == 3);  // min of the two bounds
    CHECK(prod.at(3) == SymFunc::p(1u) * Rat(2));
    CHECK((a + a).at(2) == SymFunc::p(1u) * Rat(2));
    TruncatedSeries geom = all_ones(6);
    CHECK(geom.reciprocal() ==
          TruncatedSeries::one(6) - TruncatedSeries::term(6, 1, SymFunc{Rat(1)}));
    CHECK(geom.pow(-1) == geom.reciprocal());
    CHECK(geom.pow(0) == TruncatedSeries::one(6));
}
