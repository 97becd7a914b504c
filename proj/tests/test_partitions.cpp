#include <doctest.h>

#include <algorithm>
#include <set>

#include "plethyra/partition.hpp"

using namespace plethyra;

namespace {

// Independent enumeration oracle: all weakly decreasing positive sequences
// summing to n, collected unsorted and then ordered reverse-lexicographically.
void brute_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& current,
                      std::vector<std::vector<unsigned>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (unsigned p = 1; p <= std::min(remaining, max_part); ++p) {
        current.push_back(p);
        brute_partitions(remaining - p, p, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<unsigned>> oracle_partitions(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    brute_partitions(n, n == 0 ? 1 : n, current, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

TEST_CASE("partitions_of matches the brute-force oracle") {
    for (unsigned n = 0; n <= 8; ++n) {
        auto got = partitions_of(n);
        auto expected = oracle_partitions(n);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].parts() == expected[i]);
    }
}

TEST_CASE("partitions_of frozen examples") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));
    CHECK(partitions_of(4).size() == 5);
}

TEST_CASE("stabilizer orders") {
    CHECK(stabilizer_order(Partition({1, 1, 1})) == 6);
    CHECK(stabilizer_order(Partition({3})) == 3);
    CHECK(stabilizer_order(Partition({2, 1})) == 2);
    CHECK(stabilizer_order(Partition()) == 1);
}

TEST_CASE("class sizes") {
    CHECK(class_size(Partition({1, 1, 1})) == 1);
    CHECK(class_size(Partition({2, 1})) == 3);
    CHECK(class_size(Partition({3})) == 2);
}

TEST_CASE("class sizes sum to n! and 1/z sums to 1") {
    for (unsigned n = 0; n <= 10; ++n) {
        Int total = 0;
        Rat zsum = 0;
        for (const auto& l : partitions_of(n)) {
            total += class_size(l);
            zsum += make_rat(1, stabilizer_order(l));
        }
        CHECK(total == factorial(n));
        CHECK(zsum == 1);
    }
}

TEST_CASE("enumeration is duplicate-free and totally ordered") {
    for (unsigned n = 0; n <= 10; ++n) {
        auto parts = partitions_of(n);
        std::set<std::vector<unsigned>> seen;
        for (const auto& l : parts) {
            CHECK(l.n() == n);
            CHECK(seen.insert(l.parts()).second);
        }
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) CHECK(parts[i] < parts[i + 1]);
    }
}

TEST_CASE("mults and parts views agree") {
    Partition l({4, 2, 2, 1});
    CHECK(l.n() == 9);
    CHECK(l.mult(2) == 2);
    CHECK(l.mult(4) == 1);
    CHECK(l.mult(3) == 0);
    CHECK(Partition::from_mults(l.mults()) == l);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("scaled and merged") {
    CHECK(Partition({2, 1}).scaled(3) == Partition({6, 3}));
    CHECK(Partition({2}).merged(Partition({3, 1})) == Partition({3, 2, 1}));
    CHECK(cycle_type_sign(Partition({2, 1})) == -1);
    CHECK(cycle_type_sign(Partition({3})) == 1);
    CHECK(cycle_type_sign(Partition({2, 2})) == 1);
}
