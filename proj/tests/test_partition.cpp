#include <doctest.h>

#include "oracles.hpp"
#include "pmetric/error.hpp"
#include "pmetric/partition.hpp"

using namespace pmetric;

namespace {

PointedPartition pp(int n, ElementSet j0, std::vector<ElementSet> parts) { return PointedPartition(n, j0, std::move(parts)); }

oracle::Pointed as_oracle(const PointedPartition& j) {
    oracle::Pointed out{j.j0().elements(), {}};
    for (auto part : j.parts()) out.second.push_back(part.elements());
    return oracle::normalize(out);
}

}  // namespace

TEST_CASE("construction validates the partition") {
    CHECK_THROWS_AS(pp(4, {1}, {{1, 2}, {3, 4}}), ValidationError);
    CHECK_THROWS_AS(pp(4, {}, {{1, 2}, {3}}), ValidationError);
    CHECK_THROWS_AS(pp(4, {}, {{1, 2, 3, 4}, {}}), ValidationError);
    CHECK(pp(4, {1, 3}, {{4}, {2}}).to_string() == "({1,3};{2},{4})");
}

TEST_CASE("splits") {
    CHECK(l_split(pp(4, {1, 3}, {{2, 4}}), 1, {2}) == pp(4, {1, 3}, {{2}, {4}}));
    CHECK(l_split(pp(4, {}, {{1, 2, 3, 4}}), 1, {1, 2}) == pp(4, {}, {{1, 2}, {3, 4}}));
    CHECK_THROWS_AS(l_split(pp(2, {}, {{1}, {2}}), 1, {1}), ValidationError);
    CHECK_THROWS_AS(l_split(pp(2, {}, {{1, 2}}), 1, {}), ValidationError);
    CHECK_THROWS_AS(l_split(pp(3, {}, {{1, 2}, {3}}), 1, {3}), ValidationError);
}

TEST_CASE("aggregates") {
    CHECK(l_aggregate(pp(4, {}, {{1, 2, 3, 4}}), 1, {3}) == pp(4, {3}, {{1, 2, 4}}));
    CHECK(l_aggregate(pp(4, {3}, {{1, 2, 4}}), 1, {1}) == pp(4, {1, 3}, {{2, 4}}));
    CHECK_THROWS_AS(l_aggregate(pp(4, {}, {{1, 2, 3, 4}}), 1, {1, 2, 3, 4}), ValidationError);
}

TEST_CASE("refinement examples") {
    const auto top = pp(4, {}, {{1, 2, 3, 4}});
    CHECK(is_refinement(pp(4, {1, 3}, {{2}, {4}}), top));
    CHECK(is_refinement(top, top));
    CHECK_FALSE(is_refinement(pp(4, {1, 2, 3, 4}, {}), top));
    CHECK_THROWS_AS((void)is_refinement(pp(3, {}, {{1, 2, 3}}), top), ValidationError);
}

TEST_CASE("one-step successors") {
    CHECK(one_step_successors(pp(2, {}, {{1, 2}})).size() == 3);
    CHECK(one_step_successors(pp(1, {}, {{1}})).empty());
    CHECK(one_step_successors(pp(3, {1}, {{2}, {3}})).empty());
    for (const auto& j : all_pointed_partitions(4)) {
        std::set<oracle::Pointed> got, want;
        for (const auto& s : one_step_successors(j)) got.insert(as_oracle(s));
        for (const auto& s : oracle::moves(as_oracle(j))) want.insert(s);
        CHECK(got == want);
    }
}

TEST_CASE("closed form matches reachability on [4]") {
    const auto all = all_pointed_partitions(4);
    CHECK(all.size() == 52);  // Bell(5)
    for (const auto& coarse : all) {
        const auto reach = oracle::reachable(as_oracle(coarse));
        for (const auto& fine : all) REQUIRE(is_refinement(fine, coarse) == (reach.count(as_oracle(fine)) == 1));
    }
}

TEST_CASE("set partitions") {
    CHECK(set_partitions({1, 2, 3}).size() == 5);
    CHECK(set_partitions({1, 2, 3, 4, 5}).size() == 52);
}
