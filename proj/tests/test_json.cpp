#include <doctest.h>

#include <random>

#include "plethyra/json_io.hpp"

using namespace plethyra;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-3, 4), coeff(-5, 5);
    LaurentPoly p({"y", "x", "z"}, {});
    for (int i = 0; i < 4; ++i)
        p += LaurentPoly::monomial(Rat(coeff(rng)), {"y", "x", "z"},
                                   {exp(rng), exp(rng), exp(rng)});
    return p;
}

}  // namespace

TEST_CASE("rational round trips") {
    CHECK(rat_to_string(rat_from_string("-3/6")) == "-1/2");
    CHECK(rat_to_string(rat_from_string("7")) == "7");
    CHECK(rat_from_json(Json(5)) == Rat(5));
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("round trips through JSON preserve every structure") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        LaurentPoly p = random_poly(rng);
        CHECK(laurent_from_json(to_json(p)) == p);

        SymFunc f = SymFunc::p(Partition({2, 1})) * p + SymFunc::p(1u) * Rat(3);
        CHECK(symfunc_from_json(to_json(f)) == f);

        TruncatedSeries s(4);
        s.set(1, f);
        s.set(3, SymFunc{p});
        CHECK(series_from_json(to_json(s)) == s);
    }

    ClassFunction v = irreducible_character(Partition({2, 1}));
    CHECK(class_function_from_json(to_json(v)) == v);

    SubgroupProfile k;
    k.n = 3;
    k.order = 3;
    k.cycle_type_counts[Partition({1, 1, 1})] = 1;
    k.cycle_type_counts[Partition({3})] = 2;
    SubgroupProfile k2 = subgroup_profile_from_json(to_json(k));
    CHECK(k2.order == k.order);
    CHECK(k2.cycle_type_counts == k.cycle_type_counts);

    GradedEndomorphism g;
    g.blocks[0] = {{Rat(1), make_rat(1, 2)}, {Rat(0), Rat(-2)}};
    g.blocks[3] = {{Rat(5)}};
    GradedEndomorphism g2 = endo_from_json(to_json(g));
    CHECK(g2.blocks == g.blocks);

    FiniteGroupData grp;
    grp.order = 2;
    grp.classes.push_back({"e", Int(1), {{1, "e"}, {2, "e"}}});
    grp.classes.push_back({"g", Int(1), {{1, "g"}, {2, "e"}}});
    FiniteGroupData grp2 = group_from_json(to_json(grp));
    CHECK(grp2.order == grp.order);
    CHECK(grp2.classes.size() == 2);
    CHECK(grp2.power_class("g", 2) == "e");
    CHECK(grp2.power_class("g", 4) == "e");

    RootOfUnityElement x = RootOfUnityElement::root(1, 3, Int(2)) + RootOfUnityElement::root(1, 2);
    CHECK(root_of_unity_from_json(to_json(x)) == x);
}

TEST_CASE("space descriptors accept betti and hodge shorthands") {
    SpaceDescriptor via_betti = space_from_json(Json::parse(R"({"betti":{"0":1,"2":1}})"));
    CHECK(via_betti.poly == from_betti({{0, Int(1)}, {2, Int(1)}}));
    SpaceDescriptor via_hodge =
        space_from_json(Json::parse(R"({"name":"P1","hodge":[[0,0,0,1],[1,1,2,1]]})"));
    CHECK(via_hodge.name == "P1");
    CHECK_THROWS_AS(space_from_json(Json::parse(R"({"name":"bad"})")), std::invalid_argument);
}

TEST_CASE("class function JSON requires full class coverage") {
    Json j = Json::parse(R"({"n":2,"values":[{"class":[2],"value":"1"}]})");
    CHECK_THROWS_AS(class_function_from_json(j), std::invalid_argument);
}
