#include <doctest.h>

#include "plethyra/laurent.hpp"
#include "plethyra/text_format.hpp"

using namespace plethyra;

namespace {

LaurentPoly z_pow(int k, long c = 1) {
    return LaurentPoly::monomial(Rat(c), {"z"}, ExpVec{k});
}

}  // namespace

TEST_CASE("adams operation scales exponents") {
    LaurentPoly p1_poincare = LaurentPoly(Rat(1)) + z_pow(2);
    CHECK(p1_poincare.adams(2) == LaurentPoly(Rat(1)) + z_pow(4));
    CHECK(LaurentPoly(Rat(1)).adams(7) == LaurentPoly(Rat(1)));

    LaurentPoly f = LaurentPoly::monomial(Rat(1), {"y", "x"}, {1, -1}) +
                    LaurentPoly::variable("z") * Rat(2);
    LaurentPoly expected = LaurentPoly::monomial(Rat(1), {"y", "x"}, {3, -3}) +
                           LaurentPoly::variable("z", 3) * Rat(2);
    CHECK(f.adams(3) == expected);
}

TEST_CASE("from_betti applies the (-z)^k sign rule") {
    CHECK(from_betti({{0, Int(1)}, {2, Int(1)}}) == LaurentPoly(Rat(1)) + z_pow(2));
    CHECK(from_betti({}) == LaurentPoly());
    CHECK(from_betti({{0, Int(1)}, {1, Int(2)}}) == LaurentPoly(Rat(1)) + z_pow(1, -2));
    CHECK(from_betti({{-1, Int(1)}}) == z_pow(-1, -1));
    CHECK_THROWS_AS(from_betti({{0, Int(-1)}}), std::invalid_argument);
}

TEST_CASE("from_hodge and the y=x=1 specialization") {
    CHECK(from_hodge({{0, 0, 0, Int(1)}}) == LaurentPoly(Rat(1)));
    LaurentPoly p1 = from_hodge({{0, 0, 0, Int(1)}, {1, 1, 2, Int(1)}});
    LaurentPoly yxz2 = LaurentPoly::monomial(Rat(1), {"y", "x", "z"}, {1, 1, 2});
    CHECK(p1 == LaurentPoly(Rat(1)) + yxz2);
    LaurentPoly one{Rat(1)};
    CHECK(p1.specialize("y", one).specialize("x", one) == LaurentPoly(Rat(1)) + z_pow(2));
    CHECK_THROWS_AS(from_hodge({{0, 0, 0, Int(-2)}}), std::invalid_argument);
}

TEST_CASE("specialize is a substitution homomorphism") {
    LaurentPoly p = LaurentPoly(Rat(1)) + z_pow(2);
    CHECK(p.specialize("z", LaurentPoly(Rat(1))) == LaurentPoly(Rat(2)));
    CHECK(p.specialize(std::map<std::string, LaurentPoly>{}) == p);
    // Substituting into z^{-1} needs an invertible value.
    LaurentPoly inv = z_pow(-1);
    CHECK(inv.specialize("z", LaurentPoly(Rat(2))) == LaurentPoly(make_rat(1, 2)));
    CHECK(inv.specialize("z", LaurentPoly::variable("w", 2)) ==
          LaurentPoly::monomial(Rat(1), {"w"}, {-2}));
    CHECK_THROWS_AS(inv.specialize("z", LaurentPoly(Rat(1)) + LaurentPoly::variable("w")),
                    std::domain_error);
    CHECK_THROWS_AS(inv.specialize("z", LaurentPoly()), std::domain_error);
}

TEST_CASE("specialize commutes with adams on variable renamings") {
    LaurentPoly f = LaurentPoly(Rat(1)) + z_pow(2) - z_pow(-1, 3);
    LaurentPoly w = LaurentPoly::variable("w");
    CHECK(f.specialize("z", w).adams(2) == f.adams(2).specialize("z", w));
}

TEST_CASE("arithmetic merges distinct variable sets") {
    LaurentPoly a = LaurentPoly::variable("z");
    LaurentPoly b = LaurentPoly::variable("u") * LaurentPoly::variable("v");
    LaurentPoly s = a + b;
    CHECK(s - a == b);
    CHECK(a * b == b * a);
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK(a.pow(0) == LaurentPoly(Rat(1)));
    LaurentPoly self = a + LaurentPoly(Rat(3));
    self += self;
    CHECK(self == (a + LaurentPoly(Rat(3))) * Rat(2));
}

TEST_CASE("aligned and pruned reshape variable lists") {
    LaurentPoly p = LaurentPoly::variable("z") + LaurentPoly(Rat(1));
    LaurentPoly wide = p.aligned({"y", "x", "z"});
    CHECK(wide == p);
    CHECK(wide.vars() == std::vector<std::string>{"y", "x", "z"});
    CHECK(wide.pruned().vars() == std::vector<std::string>{"z"});
    CHECK_THROWS_AS(p.aligned({"y"}), std::invalid_argument);
}

TEST_CASE("text form is deterministic graded-lex") {
    LaurentPoly p = z_pow(4) + z_pow(2) + LaurentPoly(Rat(1));
    CHECK(to_text(p) == "1+z^2+z^4");
    CHECK(to_text(from_betti({{0, Int(1)}, {1, Int(2)}})) == "1-2*z");
    CHECK(to_text(LaurentPoly()) == "0");
    LaurentPoly q = LaurentPoly::monomial(make_rat(1, 2), {"y", "x"}, {1, -1});
    CHECK(to_text(q) == "1/2*y*x^-1");
}
