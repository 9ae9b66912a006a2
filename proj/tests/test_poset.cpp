#include <doctest.h>

#include "oracles.hpp"
#include "pmetric/error.hpp"
#include "pmetric/suites.hpp"

using namespace pmetric;

namespace {

const std::vector<std::pair<int, int>> kPaCovers{{1, 3}, {1, 4}, {2, 4}};

Poset pa() { return Poset::from_covers(4, kPaCovers); }

}  // namespace

TEST_CASE("closure matches Warshall") {
    CHECK(oracle::relation_of(pa()) == oracle::warshall(4, kPaCovers));
    CHECK(pa().strict_pairs() == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}});
    const auto chain = Poset::from_covers(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(chain == Poset::chain(4));
    CHECK(chain.strict_pair_count() == 6);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        std::vector<std::pair<int, int>> covers;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j)
                if (rng() % 3 == 0) covers.emplace_back(i, j);
        CHECK(oracle::relation_of(Poset::from_covers(6, covers)) == oracle::warshall(6, covers));
    }
}

TEST_CASE("invalid relations are rejected") {
    CHECK_THROWS_WITH_AS(Poset::from_covers(3, {{1, 2}, {2, 1}}), doctest::Contains("not a partial order"),
                         ValidationError);
    CHECK_THROWS_AS(Poset::from_covers(3, {{1, 4}}), ValidationError);
    CHECK_THROWS_AS(Poset::from_covers(3, {{2, 2}}), ValidationError);
    CHECK_THROWS_AS(Poset::hierarchical({2, 0}), ValidationError);
    CHECK_THROWS_AS(Poset::from_relation({{true, true}, {true, true}}), ValidationError);
}

TEST_CASE("ideals") {
    CHECK(Poset::chain(4).ideal_of({3}) == ElementSet{1, 2, 3});
    CHECK(pa().ideal_of({}) == ElementSet{});
    CHECK(pa().ideal_of({3, 4}) == ElementSet{1, 2, 3, 4});
}

TEST_CASE("levels") {
    CHECK(Poset::antichain(4).level_structure().type_vector == std::vector<int>{4});
    CHECK(Poset::chain(4).level_structure().type_vector == std::vector<int>{1, 1, 1, 1});
    const auto ls = pa().level_structure();
    CHECK(ls.levels == std::vector<ElementSet>{{1, 2}, {3, 4}});
    CHECK(ls.type_vector == std::vector<int>{2, 2});

    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto p = random_poset(6, rng);
        CHECK(p.level_structure().heights == oracle::heights(oracle::relation_of(p)));
    }
}

TEST_CASE("refinement order") {
    const auto h22 = Poset::hierarchical({2, 2});
    CHECK(is_finer(Poset::antichain(4), pa()));
    CHECK(is_finer(pa(), h22));
    CHECK_FALSE(is_finer(Poset::chain(4), pa()));
    CHECK_THROWS_AS((void)is_finer(Poset::chain(3), pa()), ValidationError);
    for (const auto& p : all_posets(3))
        for (const auto& q : all_posets(3))
            CHECK(is_finer(p, q) == oracle::finer(oracle::relation_of(p), oracle::relation_of(q)));
}

TEST_CASE("hierarchy flags") {
    CHECK(hierarchy_flags(Poset::hierarchical({2, 2})).hierarchical == std::vector<int>{1, 2});
    CHECK(hierarchy_flags(pa()).hierarchical == std::vector<int>{1});
    CHECK(hierarchy_flags(Poset::chain(4)).hierarchical == std::vector<int>{1, 2, 3, 4});
    CHECK(is_hierarchical(Poset::hierarchical({1, 3})));
    CHECK_FALSE(is_hierarchical(pa()));
}

TEST_CASE("adjacent-level flags over-report below a maximal element") {
    // 1<2<3 with 4 isolated: level 2 = {2} dominates level 1 = {1,4} only partly,
    // but level 3 = {3} dominates level 2 = {2} entirely.
    const auto p = Poset::from_covers(4, {{1, 2}, {2, 3}});
    CHECK(adjacent_level_flags(p).hierarchical == std::vector<int>{1, 3});
    CHECK(hierarchy_flags(p).hierarchical == std::vector<int>{1});
    // Blocks cut at the adjacent flags give a poset that is not below P.
    const auto levels = p.level_structure().levels;
    const auto cut = Poset::from_ordered_blocks(4, {levels[0] | levels[1], levels[2]});
    CHECK_FALSE(is_finer(cut, p));
}

TEST_CASE("hierarchical constructor") {
    CHECK(Poset::hierarchical({2, 2}).strict_pairs() == std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(Poset::hierarchical({5}) == Poset::antichain(5));
    CHECK(Poset::hierarchical({1, 1, 1, 1, 1}) == Poset::chain(5));
}

TEST_CASE("automorphisms match permutation filter") {
    CHECK(automorphisms(pa()) == std::vector<Permutation>{{1, 2, 3, 4}});
    CHECK(automorphisms(Poset::antichain(3)).size() == 6);
    CHECK(automorphisms(Poset::hierarchical({2, 2})) ==
          std::vector<Permutation>{{1, 2, 3, 4}, {1, 2, 4, 3}, {2, 1, 3, 4}, {2, 1, 4, 3}});
    for (const auto& p : all_posets(4)) CHECK(automorphisms(p) == oracle::automorphisms(oracle::relation_of(p)));
    CHECK_THROWS_AS((void)automorphisms(Poset::antichain(11)), ResourceError);
}

TEST_CASE("isomorphism") {
    std::vector<std::pair<int, int>> down;
    for (int i = 5; i > 1; --i) down.emplace_back(i, i - 1);
    const auto reversed = Poset::from_covers(5, down);
    const auto sigma = find_isomorphism(Poset::chain(5), reversed);
    REQUIRE(sigma.has_value());
    CHECK(*sigma == Permutation{5, 4, 3, 2, 1});
    CHECK_FALSE(find_isomorphism(Poset::chain(3), Poset::antichain(3)).has_value());
    CHECK(find_isomorphism(pa(), pa()) == Permutation{1, 2, 3, 4});
}

TEST_CASE("catalogs") {
    CHECK(all_posets(3).size() == 19);
    CHECK(all_posets(4).size() == 219);
    CHECK(all_hierarchical_posets(4).size() == oracle::hierarchical_relations(4).size());
    CHECK(all_hierarchical_posets(4).size() == 75);
    for (const auto& h : all_hierarchical_posets(4)) CHECK(is_hierarchical(h));
}

TEST_CASE("induced subposet") {
    const auto sub = pa().induced({1, 2, 4});
    CHECK(sub.size() == 3);
    CHECK(sub.strict_pairs() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
}

TEST_CASE("DOT output draws cover edges") {
    const auto dot = to_dot(Poset::chain(4));
    CHECK(dot.find("1 -> 2") != std::string::npos);
    CHECK(dot.find("3 -> 4") != std::string::npos);
    CHECK(dot.find("1 -> 3") == std::string::npos);
}
