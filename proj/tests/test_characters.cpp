#include <doctest.h>

#include "plethyra/character.hpp"
#include "plethyra/symfunc.hpp"

using namespace plethyra;

TEST_CASE("character table basics") {
    CharacterTable t1(1);
    CHECK(t1.value(Partition({1}), Partition({1})) == 1);
    for (unsigned n = 1; n <= 5; ++n) {
        CharacterTable t(n);
        for (const auto& l : t.classes()) CHECK(t.value(Partition({n}), l) == 1);
    }
}

TEST_CASE("chi^(2,1) at the identity via row orthogonality") {
    // Independent route: with the rows for (3) and (1,1,1) known to be the
    // trivial and sign characters, orthogonality pins the standard character.
    CharacterTable t(3);
    Partition id({1, 1, 1}), tr({2, 1}), cyc({3});
    Partition mu({2, 1});
    // Row values must satisfy sum chi(l)^2/z_l = 1 and orthogonality to both
    // one-dimensional rows; solving gives (2, 0, -1).
    CHECK(t.value(mu, id) == 2);
    CHECK(t.value(mu, tr) == 0);
    CHECK(t.value(mu, cyc) == -1);
    Rat norm = Rat(t.value(mu, id) * t.value(mu, id)) / Rat(stabilizer_order(id)) +
               Rat(t.value(mu, tr) * t.value(mu, tr)) / Rat(stabilizer_order(tr)) +
               Rat(t.value(mu, cyc) * t.value(mu, cyc)) / Rat(stabilizer_order(cyc));
    CHECK(norm == 1);
}

TEST_CASE("frobenius characteristic of the basic characters") {
    for (unsigned n = 0; n <= 5; ++n) {
        CHECK(frobenius_char(trivial_character(n)) == h_basis(n));
        CHECK(frobenius_char(sign_character(n)) == e_basis(n));
    }
    // Regular character maps to p_1^n.
    for (unsigned n = 1; n <= 4; ++n) {
        SymFunc expected = SymFunc::p(Partition(std::vector<unsigned>(n, 1)));
        CHECK(frobenius_char(regular_character(n)) == expected);
    }
}

TEST_CASE("induced trivial characters") {
    // K = Sigma_n itself.
    SubgroupProfile full;
    full.n = 3;
    full.order = 6;
    full.cycle_type_counts[Partition({1, 1, 1})] = 1;
    full.cycle_type_counts[Partition({2, 1})] = 3;
    full.cycle_type_counts[Partition({3})] = 2;
    CHECK(induced_trivial_character(full) == trivial_character(3));

    // K = {e}.
    SubgroupProfile trivial_k;
    trivial_k.n = 3;
    trivial_k.order = 1;
    trivial_k.cycle_type_counts[Partition({1, 1, 1})] = 1;
    CHECK(induced_trivial_character(trivial_k) == regular_character(3));

    // K = C3 <= Sigma_3.
    SubgroupProfile c3;
    c3.n = 3;
    c3.order = 3;
    c3.cycle_type_counts[Partition({1, 1, 1})] = 1;
    c3.cycle_type_counts[Partition({3})] = 2;
    ClassFunction ind = induced_trivial_character(c3);
    CHECK(ind.at(Partition({1, 1, 1})) == 2);
    CHECK(ind.at(Partition({2, 1})) == 0);
    CHECK(ind.at(Partition({3})) == 2);
    CHECK(ind.dimension() == 2);  // 6/3

    // Inconsistent profile: a lone transposition count that fails integrality.
    SubgroupProfile bad;
    bad.n = 3;
    bad.order = 2;
    bad.cycle_type_counts[Partition({1, 1, 1})] = 1;
    bad.cycle_type_counts[Partition({3})] = 1;
    CHECK_THROWS_AS(induced_trivial_character(bad), std::invalid_argument);
}

TEST_CASE("pointwise products") {
    ClassFunction v = irreducible_character(Partition({2, 1}));
    CHECK(pointwise_product(trivial_character(3), v) == v);
    CHECK(pointwise_product(sign_character(3), sign_character(3)) == trivial_character(3));
    // (2,1) is self-conjugate.
    CHECK(pointwise_product(sign_character(3), v) == v);
    CHECK_THROWS_AS(pointwise_product(trivial_character(2), v), std::invalid_argument);
}

TEST_CASE("induction product matches the regular representation of Sigma_2") {
    ClassFunction ind = induction_product(trivial_character(1), trivial_character(1));
    CHECK(ind.at(Partition({1, 1})) == 2);
    CHECK(ind.at(Partition({2})) == 0);
    CHECK(frobenius_char(ind) == h_basis(1) * h_basis(1));
}
