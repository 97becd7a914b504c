#include <doctest.h>

#include <random>

#include "plethyra/symfunc.hpp"

using namespace plethyra;

namespace {

SymFunc p(std::initializer_list<unsigned> parts) { return SymFunc::p(Partition(parts)); }

}  // namespace

TEST_CASE("multiplication in the p basis") {
    CHECK(SymFunc::p(1u) * SymFunc::p(1u) == p({1, 1}));
    CHECK(h_basis(1) * h_basis(1) == h_basis(2) + e_basis(2));
    SymFunc f = p({2, 1}) * LaurentPoly::variable("z");
    CHECK(SymFunc{Rat(1)} * f == f);
}

TEST_CASE("internal product rule") {
    CHECK(SymFunc::p(2u).internal_product(SymFunc::p(2u)) == SymFunc::p(2u) * Rat(2));
    CHECK(SymFunc::p(2u).internal_product(p({1, 1})).is_zero());
    // h_n is the identity in degree n.
    std::mt19937 rng(99);
    for (unsigned n = 1; n <= 4; ++n) {
        SymFunc f;
        for (const auto& l : partitions_of(n))
            f += SymFunc::p(l) * Rat(std::uniform_int_distribution<int>(-3, 3)(rng));
        CHECK(h_basis(n).internal_product(f) == f);
    }
}

TEST_CASE("plethysm substitution") {
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 1; n <= 4; ++n)
            CHECK(plethysm(SymFunc::p(m), SymFunc::p(n)) == SymFunc::p(m * n));
    SymFunc f = p({2, 1}) * LaurentPoly::variable("z") + p({1, 1});
    CHECK(plethysm(f, SymFunc::p(1u)) == f);
    CHECK(plethysm(SymFunc::p(1u), f) == f);
    // The Adams twist hits the inner coefficients only.
    SymFunc outer = SymFunc::p(2u) * LaurentPoly::variable("z");
    SymFunc inner = SymFunc::p(1u) * LaurentPoly::variable("z");
    CHECK(plethysm(outer, inner) == SymFunc::p(2u) * LaurentPoly::variable("z", 3));
}

TEST_CASE("h, e and schur conversions") {
    CHECK(h_basis(0u) == SymFunc{Rat(1)});
    CHECK(e_basis(0u) == SymFunc{Rat(1)});
    CHECK(h_basis(2u) == p({1, 1}) * make_rat(1, 2) + p({2}) * make_rat(1, 2));
    CHECK(e_basis(2u) == p({1, 1}) * make_rat(1, 2) - p({2}) * make_rat(1, 2));
    CHECK(schur(Partition({2, 1})) ==
          p({1, 1, 1}) * make_rat(1, 3) - p({3}) * make_rat(1, 3));
    CHECK(schur(Partition({2})) == h_basis(2u));
    // h_lambda as products.
    CHECK(h_basis(Partition({2, 1})) == h_basis(2u) * h_basis(1u));
}

TEST_CASE("specialize_p rules") {
    for (unsigned n = 0; n <= 5; ++n) {
        CHECK(h_basis(n).specialize_p_ones() == LaurentPoly(Rat(1)));
        if (n >= 2) CHECK(e_basis(n).specialize_p_ones() == LaurentPoly());
        CHECK(e_basis(n).specialize_p_alternating() == LaurentPoly(Rat(1)));
    }
    // s_mu at (p_1 = 1, p_r = 0 otherwise) gives dim/n!.
    for (const auto& mu : partitions_of(4)) {
        Rat dim = irreducible_character(mu).dimension();
        CHECK(schur(mu).specialize_p_forget() == LaurentPoly(dim / Rat(factorial(4))));
    }
    CHECK_THROWS_AS(p({2}).specialize_p([](unsigned) -> LaurentPoly {
        throw std::invalid_argument("missing rule entry");
    }),
                    std::invalid_argument);
}

TEST_CASE("homogeneous structure") {
    SymFunc f = p({2, 1}) + p({1}) * Rat(5);
    CHECK(f.degree() == 3);
    CHECK(f.homogeneous_part(3) == p({2, 1}));
    CHECK(f.homogeneous_part(1) == p({1}) * Rat(5));
    CHECK(f.truncated(1) == p({1}) * Rat(5));
    CHECK(!f.is_homogeneous(3));
    CHECK((p({2, 1}) * p({3})).is_homogeneous(6));
}

TEST_CASE("adams twist composes") {
    SymFunc f = p({2, 1}) * LaurentPoly::variable("z") + p({1}) * Rat(2);
    CHECK(f.adams_twist(2).adams_twist(3) == f.adams_twist(6));
    CHECK(f.adams_twist(1) == f);
    SymFunc twisted = f.adams_twist(2);
    CHECK(twisted.coefficient(Partition({4, 2})) == LaurentPoly::variable("z", 2));
}
