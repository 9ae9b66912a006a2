#include <doctest.h>

#include "oracles.hpp"
#include "pmetric/error.hpp"
#include "pmetric/metric.hpp"
#include "pmetric/suites.hpp"

using namespace pmetric;
using oracle::code;
using oracle::fv;

TEST_CASE("support") {
    CHECK(support(fv(2, {1, 0, 1, 0})) == ElementSet{1, 3});
    CHECK(support(fv(2, {0, 0, 0, 0})).empty());
    CHECK(support(fv(3, {0, 0, 0, 2})) == ElementSet{4});
}

TEST_CASE("poset weight examples") {
    CHECK(pweight(Poset::antichain(4), fv(2, {1, 0, 1, 0})) == 2);
    CHECK(pweight(Poset::chain(4), fv(2, {0, 1, 0, 0})) == 2);
    CHECK(pweight(Poset::hierarchical({2, 2}), fv(2, {1, 0, 1, 0})) == 3);
    CHECK_THROWS_AS((void)pweight(Poset::chain(3), fv(2, {1, 0, 1, 0})), ValidationError);
}

TEST_CASE("distance") {
    const auto x = fv(3, {1, 2, 0, 1});
    CHECK(pdist(Poset::chain(4), x, x) == 0);
    CHECK(pdist(Poset::chain(4), fv(2, {1, 1, 0, 0}), fv(2, {1, 0, 0, 0})) == 2);
}

TEST_CASE("weight equals ideal-closure oracle") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_poset(5, rng);
        const auto rel = oracle::relation_of(p);
        for (const auto& x : oracle::space(3, 5)) {
            std::vector<std::int64_t> e(x.begin(), x.end());
            REQUIRE(pweight(p, fv(3, e)) == oracle::ideal_weight(rel, x));
        }
    }
}

TEST_CASE("minimum distance") {
    CHECK(min_pdistance(Poset::chain(4), code(2, {{1, 1, 1, 1}})) == 4);
    CHECK(min_pdistance(Poset::antichain(4), code(2, {{1, 1, 0, 0}, {0, 0, 1, 1}})) == 2);
    CHECK(min_pdistance(Poset::hierarchical({2, 2}), code(2, {{0, 0, 1, 1}})) == 4);
}
