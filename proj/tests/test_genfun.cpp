#include <doctest.h>

#include "plethyra/genfun.hpp"
#include "plethyra/oracle.hpp"

using namespace plethyra;

namespace {

SpaceDescriptor p1_space() { return {"P1", from_betti({{0, Int(1)}, {2, Int(1)}})}; }

LaurentPoly z_pow(int k, long c = 1) {
    return LaurentPoly::monomial(Rat(c), {"z"}, ExpVec{k});
}

}  // namespace

TEST_CASE("char_series of a point and of P1") {
    SpaceDescriptor pt{"pt", LaurentPoly(Rat(1))};
    TruncatedSeries s = char_series(pt, 5);
    for (unsigned n = 0; n <= 5; ++n) CHECK(s.at(n) == h_basis(n));

    TruncatedSeries sp1 = char_series(p1_space(), 3);
    LaurentPoly p = p1_space().poly;
    SymFunc expected2 = SymFunc::p(Partition({1, 1})) * (p.pow(2) * make_rat(1, 2)) +
                        SymFunc::p(Partition({2})) * (p.adams(2) * make_rat(1, 2));
    CHECK(sp1.at(2) == expected2);

    SpaceDescriptor empty{"empty", LaurentPoly()};
    TruncatedSeries se = char_series(empty, 4);
    CHECK(se.at(0) == SymFunc{Rat(1)});
    for (unsigned n = 1; n <= 4; ++n) CHECK(se.at(n).is_zero());
}

TEST_CASE("twisted characters") {
    SpaceDescriptor x = p1_space();
    for (unsigned n = 1; n <= 4; ++n)
        CHECK(twisted_character(trivial_character(n), x) == char_series(x, n).at(n));
    // Regular character: only the identity class survives.
    for (unsigned n = 1; n <= 3; ++n) {
        SymFunc expected =
            SymFunc::p(Partition(std::vector<unsigned>(n, 1))) * x.poly.pow(n);
        CHECK(twisted_character(regular_character(n), x) == expected);
    }
    // Odd line: the second alternating power lives in degree 2.
    SpaceDescriptor odd_line{"odd", z_pow(1, -1)};
    SymFunc tw = twisted_character(sign_character(2), odd_line);
    CHECK(tw.specialize_p_ones() == z_pow(2));
}

TEST_CASE("schur values") {
    SpaceDescriptor x{"X", z_pow(1, 3) + LaurentPoly(Rat(1))};
    LaurentPoly expected = (x.poly.pow(2) + x.poly.adams(2)) * make_rat(1, 2);
    CHECK(schur_value(trivial_character(2), x) == expected);

    SpaceDescriptor odd_line{"odd", z_pow(1, -1)};
    CHECK(schur_value(trivial_character(2), odd_line) == LaurentPoly());
    CHECK(schur_value(sign_character(2), odd_line) == z_pow(2));
}

TEST_CASE("schur_value equals the substitution-homomorphism route") {
    SpaceDescriptor x{"X", from_betti({{0, Int(2)}, {1, Int(1)}, {2, Int(1)}})};
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& mu : partitions_of(n)) {
            ClassFunction v = irreducible_character(mu);
            LaurentPoly via_substitution = frobenius_char(v).specialize_p(
                [&](unsigned r) { return x.poly.adams(r); });
            CHECK(schur_value(v, x) == via_substitution);
        }
}

TEST_CASE("schur decomposition") {
    SpaceDescriptor x = p1_space();
    auto d1 = schur_decomposition(x, 1);
    REQUIRE(d1.size() == 1);
    CHECK(d1.at(Partition({1})) == x.poly);

    SpaceDescriptor pt{"pt", LaurentPoly(Rat(1))};
    auto d2 = schur_decomposition(pt, 2);
    CHECK(d2.at(Partition({2})) == LaurentPoly(Rat(1)));
    CHECK(d2.at(Partition({1, 1})) == LaurentPoly());

    for (unsigned n = 0; n <= 4; ++n) {
        auto d = schur_decomposition(x, n);
        SymFunc reassembled;
        for (const auto& [mu, value] : d) reassembled += schur(mu) * value;
        CHECK(reassembled == char_series(x, n).at(n));
    }
}

TEST_CASE("macdonald series of P1 is 1/((1-t)(1-z^2 t))") {
    TruncatedSeries mac = macdonald_series(p1_space(), 8);
    LaurentPoly acc({"z"}, {});
    for (unsigned n = 0; n <= 8; ++n) {
        acc += z_pow(2 * static_cast<int>(n));
        CHECK(mac.at(n) == SymFunc{acc});
    }
    // z=1 gives (1-t)^{-chi} with chi = 2.
    for (unsigned n = 0; n <= 8; ++n) {
        LaurentPoly at1 = mac.at(n).coefficient(Partition()).specialize("z", LaurentPoly(Rat(1)));
        CHECK(at1 == LaurentPoly(Rat(static_cast<long>(n + 1))));
    }
}

TEST_CASE("macdonald at z=1 is (1-t)^{-chi} for any Euler characteristic") {
    for (long chi_sign : {1L, -1L}) {
        // chi = 3 and chi = -3 via 3 even or 3 odd generators.
        std::map<int, Int> betti =
            chi_sign > 0 ? std::map<int, Int>{{0, Int(2)}, {2, Int(1)}}
                         : std::map<int, Int>{{1, Int(3)}};
        SpaceDescriptor x{"X", from_betti(betti)};
        long chi = 3 * chi_sign;
        TruncatedSeries mac = macdonald_series(x, 6);
        TruncatedSeries at1(6);
        for (unsigned n = 0; n <= 6; ++n)
            at1.set(n, SymFunc{mac.at(n).coefficient(Partition()).specialize(
                          "z", LaurentPoly(Rat(1)))});
        TruncatedSeries one_minus_t =
            TruncatedSeries::one(6) - TruncatedSeries::term(6, 1, SymFunc{Rat(1)});
        CHECK(at1 == one_minus_t.pow(-chi));
    }
}

TEST_CASE("kunneth coefficients are P^n/n!") {
    SpaceDescriptor x{"X", z_pow(2) + LaurentPoly(Rat(2))};
    TruncatedSeries kue = kunneth_series(x, 5);
    for (unsigned n = 0; n <= 5; ++n)
        CHECK(kue.at(n) == SymFunc{x.poly.pow(n) * make_rat(1, factorial(n))});
}

TEST_CASE("quotient polynomials") {
    SpaceDescriptor x = p1_space();
    SubgroupProfile trivial_k;
    trivial_k.n = 2;
    trivial_k.order = 1;
    trivial_k.cycle_type_counts[Partition({1, 1})] = 1;
    CHECK(quotient_polynomial(trivial_k, x) == x.poly.pow(2));

    SubgroupProfile sym2;
    sym2.n = 2;
    sym2.order = 2;
    sym2.cycle_type_counts[Partition({1, 1})] = 1;
    sym2.cycle_type_counts[Partition({2})] = 1;
    CHECK(quotient_polynomial(sym2, x) ==
          LaurentPoly(Rat(1)) + z_pow(2) + z_pow(4));

    SubgroupProfile c3;
    c3.n = 3;
    c3.order = 3;
    c3.cycle_type_counts[Partition({1, 1, 1})] = 1;
    c3.cycle_type_counts[Partition({3})] = 2;
    CHECK(quotient_polynomial(c3, x) ==
          (x.poly.pow(3) + x.poly.adams(3) * Rat(2)) * make_rat(1, 3));
}

TEST_CASE("configuration series") {
    LaurentPoly uv = LaurentPoly::variable("u") * LaurentPoly::variable("v");
    SpaceDescriptor line{"A1", uv};
    TruncatedSeries conf = configuration_series(line, 3);
    CHECK(conf.at(0) == SymFunc{Rat(1)});
    CHECK(conf.at(1) == SymFunc::p(1u) * uv);
    LaurentPoly pairs = conf.at(2).specialize_p_ones();
    CHECK(pairs == LaurentPoly::monomial(Rat(1), {"u", "v"}, {2, 2}) -
                       LaurentPoly::monomial(Rat(1), {"u", "v"}, {1, 1}));

    SpaceDescriptor pt{"pt", LaurentPoly(Rat(1))};
    TruncatedSeries conf_pt = configuration_series(pt, 4);
    CHECK(conf_pt.at(1) == SymFunc::p(1u));
    for (unsigned n = 2; n <= 4; ++n) CHECK(conf_pt.at(n).is_zero());
}

TEST_CASE("hilbert series modes") {
    // d = 1 punctual series: 1 + t + t^2 + ...
    TruncatedSeries punctual(6);
    for (unsigned i = 0; i <= 6; ++i) punctual.set(i, SymFunc{Rat(1)});

    SpaceDescriptor x = p1_space();
    CHECK(hilbert_series(x, punctual, 6, HilbertMode::symmetric) == macdonald_series(x, 6));

    SpaceDescriptor pt{"pt", LaurentPoly(Rat(1))};
    TruncatedSeries base_back = hilbert_series(pt, punctual, 6, HilbertMode::symmetric);
    CHECK(base_back == punctual);

    SpaceDescriptor empty{"empty", LaurentPoly()};
    CHECK(hilbert_series(empty, punctual, 6, HilbertMode::symmetric) == TruncatedSeries::one(6));

    TruncatedSeries bad(3);
    CHECK_THROWS_AS(hilbert_series(x, bad, 3, HilbertMode::symmetric), std::domain_error);
}
