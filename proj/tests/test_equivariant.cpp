#include <doctest.h>

#include "plethyra/equivariant.hpp"
#include "plethyra/genfun.hpp"

using namespace plethyra;

namespace {

LaurentPoly z_pow(int k, long c = 1) {
    return LaurentPoly::monomial(Rat(c), {"z"}, ExpVec{k});
}

GradedEndomorphism p1_endo(long degree) {
    GradedEndomorphism g;
    g.blocks[0] = {{Rat(1)}};
    g.blocks[2] = {{Rat(degree)}};
    return g;
}

}  // namespace

TEST_CASE("graded trace polynomials") {
    GradedEndomorphism id;
    id.blocks[0] = {{Rat(1)}};
    id.blocks[2] = {{Rat(1)}};
    CHECK(graded_trace_poly(id) == LaurentPoly(Rat(1)) + z_pow(2));
    CHECK(graded_trace_poly(p1_endo(3)) == LaurentPoly(Rat(1)) + z_pow(2, 3));
    GradedEndomorphism zero;
    zero.blocks[1] = {{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
    CHECK(graded_trace_poly(zero) == LaurentPoly());
}

TEST_CASE("endo_power") {
    GradedEndomorphism g;
    g.blocks[0] = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(endo_power(g, 1).blocks == g.blocks);
    GradedEndomorphism sq = endo_power(g, 2);
    CHECK(mat_trace(sq.blocks[0]) == 2);
    GradedEndomorphism d;
    d.blocks[0] = {{Rat(2)}};
    CHECK(mat_trace(endo_power(d, 3).blocks[0]) == 8);
}

TEST_CASE("l_function and char_poly_lambda") {
    RatMatrix one{{Rat(1)}};
    auto l1 = l_function(one);
    CHECK(l1.expand(4) == std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});

    RatMatrix two{{Rat(2)}};
    auto l2 = l_function(two);
    CHECK(l2.expand(3) == std::vector<Rat>{Rat(1), Rat(2), Rat(4), Rat(8)});

    RatMatrix swap{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(l_function(swap).denominator() == std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});

    CHECK(char_poly_lambda(mat_identity(2)).numerator() ==
          std::vector<Rat>{Rat(1), Rat(2), Rat(1)});
    CHECK(char_poly_lambda(swap).numerator() == std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});
    RatMatrix zero{{Rat(0)}};
    CHECK(char_poly_lambda(zero).numerator() == std::vector<Rat>{Rat(1)});

    // Rational function normalization cancels common factors.
    RationalFunctionSeries q({Rat(1), Rat(2), Rat(1)}, {Rat(1), Rat(1)});
    CHECK(q.numerator() == std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(q.denominator() == std::vector<Rat>{Rat(1)});
}

TEST_CASE("lefschetz zeta of P1 endomorphisms") {
    // Identity: the Macdonald series of P1.
    TruncatedSeries zeta_id = lefschetz_zeta(p1_endo(1), 6, true);
    TruncatedSeries mac = macdonald_series({"P1", LaurentPoly(Rat(1)) + z_pow(2)}, 6);
    CHECK(zeta_id == mac);

    // Degree-2 map at z=1: 1/((1-t)(1-2t)), coefficients 1,3,7,15,31.
    TruncatedSeries zeta2 = lefschetz_zeta(p1_endo(2), 4, false);
    std::vector<long> expected{1, 3, 7, 15, 31};
    for (unsigned n = 0; n <= 4; ++n)
        CHECK(zeta2.at(n) == SymFunc{Rat(expected[n])});

    // Graded degree-2 map: coefficient of t^n is sum_k (2 z^2)^k.
    TruncatedSeries zg = lefschetz_zeta(p1_endo(2), 4, true);
    LaurentPoly acc({"z"}, {});
    LaurentPoly ratio = z_pow(2, 2);
    LaurentPoly pw{Rat(1)};
    for (unsigned n = 0; n <= 4; ++n) {
        acc += pw;
        CHECK(zg.at(n) == SymFunc{acc});
        pw = pw * ratio;
    }
}

TEST_CASE("group_macdonald worked example") {
    // C2 with the regular representation in degree 0: h(e) = 2, h(g) = 0.
    FiniteGroupData c2;
    c2.order = 2;
    c2.classes.push_back({"e", Int(1), {{2, "e"}, {3, "e"}, {4, "e"}}});
    c2.classes.push_back({"g", Int(1), {{2, "e"}, {3, "g"}, {4, "e"}}});
    c2.classes[0].power_maps[1] = "e";
    c2.classes[1].power_maps[1] = "g";
    std::map<std::string, LaurentPoly> h{{"e", LaurentPoly(Rat(2))}, {"g", LaurentPoly()}};
    auto result = group_macdonald(c2, h, 4);
    // Class e: macdonald of a two-point space, (1-t)^{-2}.
    for (unsigned n = 0; n <= 4; ++n)
        CHECK(result.at("e").at(n) == SymFunc{Rat(static_cast<long>(n + 1))});
    // Class g: exp(2t^2/2 + 2t^4/4 + ...) = 1/(1-t^2).
    CHECK(result.at("g").at(0) == SymFunc{Rat(1)});
    CHECK(result.at("g").at(1).is_zero());
    CHECK(result.at("g").at(2) == SymFunc{Rat(1)});
    CHECK(result.at("g").at(3).is_zero());
    CHECK(result.at("g").at(4) == SymFunc{Rat(1)});

    // Missing power map for a prime exponent is an error.
    FiniteGroupData incomplete;
    incomplete.order = 2;
    incomplete.classes.push_back({"e", Int(1), {}});
    incomplete.classes.push_back({"g", Int(1), {{2, "e"}}});
    CHECK_THROWS_AS(group_macdonald(incomplete, h, 3), std::invalid_argument);
}

TEST_CASE("negative cohomological degrees (shifted complexes)") {
    GradedEndomorphism g;
    g.blocks[-1] = {{Rat(1)}};
    g.blocks[0] = {{Rat(2)}};
    CHECK(graded_trace_poly(g) ==
          LaurentPoly(Rat(2)) - LaurentPoly::variable("z", -1));
    // Both zeta routes must still agree with Laurent weights z^{-r}.
    TruncatedSeries zeta = lefschetz_zeta(g, 5, true);
    CHECK(zeta.at(0) == SymFunc{Rat(1)});
    TruncatedSeries plain = lefschetz_zeta(g, 5, false);
    // exp(sum (2^r - 1) t^r / r) = (1-t)/(1-2t): coefficients 1,1,2,4,8,...
    CHECK(plain.at(1) == SymFunc{Rat(1)});
    CHECK(plain.at(2) == SymFunc{Rat(2)});
    CHECK(plain.at(3) == SymFunc{Rat(4)});
    CHECK(plain.at(4) == SymFunc{Rat(8)});
}

TEST_CASE("root of unity Adams operations") {
    using R = RootOfUnityElement;
    CHECK(mu_adams(R::root(1, 2), 2) == R::one());
    CHECK(mu_adams(R::one(), 9) == R::one());
    R thirds = R::root(1, 3) + R::root(2, 3);
    CHECK(mu_adams(thirds, 3) == R::root(0, 1, Int(2)));
    // Multiplication in the group ring: zeta_3 · zeta_3^2 = 1.
    CHECK(R::root(1, 3) * R::root(2, 3) == R::one());
    CHECK(R::root(1, 4) * R::root(1, 4) == R::root(1, 2));
}
