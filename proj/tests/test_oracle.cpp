#include <doctest.h>

#include "plethyra/genfun.hpp"
#include "plethyra/oracle.hpp"

using namespace plethyra;

namespace {

LaurentPoly z_pow(int k, long c = 1) {
    return LaurentPoly::monomial(Rat(c), {"z"}, ExpVec{k});
}

}  // namespace

TEST_CASE("koszul-signed traces on tensor powers") {
    ExplicitGradedSpace point{{{"v", 0}}};
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& sigma : partitions_of(n))
            CHECK(permutation_action_trace(point, n, sigma) == LaurentPoly(Rat(1)));

    // One odd generator: the swap contributes a single Koszul sign.
    ExplicitGradedSpace odd{{{"v", 1}}};
    CHECK(permutation_action_trace(odd, 2, Partition({2})) == z_pow(2, -1));
    CHECK(permutation_action_trace(odd, 2, Partition({1, 1})) == z_pow(2));

    // Degrees {0,1}: trace of the swap is psi_2(1 - z).
    ExplicitGradedSpace mixed{{{"a", 0}, {"b", 1}}};
    CHECK(permutation_action_trace(mixed, 2, Partition({2})) ==
          LaurentPoly(Rat(1)) - z_pow(2));
    CHECK(mixed.identity_trace() == LaurentPoly(Rat(1)) - z_pow(1));
}

TEST_CASE("traces realize the Adams operations") {
    ExplicitGradedSpace v{{{"a", 0}, {"b", 1}, {"c", 2}}};
    LaurentPoly pv = v.identity_trace();
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& sigma : partitions_of(n)) {
            LaurentPoly expected{Rat(1)};
            for (const auto& [r, k] : sigma.mults()) expected *= pv.adams(r).pow(k);
            CHECK(permutation_action_trace(v, n, sigma) == expected);
        }
}

TEST_CASE("twist multiplies the trace by the character value") {
    ExplicitGradedSpace v{{{"a", 0}, {"b", 2}}};
    ClassFunction sign = sign_character(3);
    Partition sigma({2, 1});
    LaurentPoly untwisted = permutation_action_trace(v, 3, sigma);
    CHECK(permutation_action_trace(v, 3, sigma, &sign) == untwisted * Rat(-1));
}

TEST_CASE("projector ranks match schur values") {
    ExplicitGradedSpace line0{{{"v", 0}}};
    CHECK(projector_rank(line0, 3, trivial_character(3)) == LaurentPoly(Rat(1)));

    ExplicitGradedSpace line1{{{"v", 1}}};
    CHECK(projector_rank(line1, 2, trivial_character(2)) == LaurentPoly());
    CHECK(projector_rank(line1, 2, sign_character(2)) == z_pow(2));

    // Standard representation of Sigma_3 as the twist.
    ExplicitGradedSpace v{{{"a", 0}, {"b", 1}}};
    ClassFunction std3 = irreducible_character(Partition({2, 1}));
    SpaceDescriptor x{"V", v.identity_trace()};
    CHECK(projector_rank(v, 3, std3) == schur_value(std3, x));
}

TEST_CASE("size bound is enforced") {
    ExplicitGradedSpace big;
    for (int i = 0; i < 10; ++i) big.basis.push_back({"v", 0});
    CHECK_THROWS_AS(permutation_action_trace(big, 7, Partition({7})), std::domain_error);
    CHECK_THROWS_AS(projector_rank(big, 7, trivial_character(7)), std::domain_error);
}

TEST_CASE("cycle types and canonical permutations") {
    CHECK(cycle_type_of({1, 0, 2}) == Partition({2, 1}));
    CHECK(cycle_type_of(canonical_permutation(Partition({3, 2}))) == Partition({3, 2}));
    CHECK(rational_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
    CHECK(rational_rank({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
}
