#include <doctest.h>

#include "oracles.hpp"
#include "pmetric/decoder.hpp"
#include "pmetric/error.hpp"
#include "pmetric/io.hpp"
#include "pmetric/suites.hpp"

using namespace pmetric;
using oracle::code;
using oracle::fv;
using nlohmann::json;

TEST_CASE("poset round trip") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_poset(6, rng);
        CHECK(io::poset_from_json(io::to_json(p)) == p);
    }
    CHECK_THROWS_AS(io::poset_from_json(json{{"n", 3}, {"covers", {{1, 2}, {2, 1}}}}), ValidationError);
    CHECK_THROWS_AS(io::poset_from_json(json{{"covers", json::array()}}), ValidationError);
    CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"n": 2, "covers": [[1, "x"]]})")), ValidationError);
}

TEST_CASE("code and partition round trip") {
    const auto c = code(3, {{1, 2, 0}, {0, 1, 1}});
    CHECK(io::code_from_json(io::to_json(c)) == c);
    CHECK_THROWS_AS(io::code_from_json(json{{"q", 4}, {"n", 2}, {"generators", {{1, 1}}}}), ValidationError);
    CHECK_THROWS_AS(io::code_from_json(json{{"q", 2}, {"n", 3}, {"generators", {{1, 1}}}}), ValidationError);
    const PointedPartition j(4, {1, 3}, {{2}, {4}});
    CHECK(io::partition_from_json(io::to_json(j)) == j);
}

TEST_CASE("decomposition and isometry round trip") {
    const auto d = maximal_decomposition(code(2, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    const auto back = io::decomposition_from_json(io::to_json(d));
    CHECK(back.code() == d.code());
    CHECK(back.components() == d.components());
    const auto p = Poset::chain(4);
    const PIsometry t(p, identity_permutation(4), chain_sweep_matrix(PrimeField(2), 4));
    CHECK(io::isometry_from_json(io::to_json(t), p, PrimeField(2)) == t);
}

TEST_CASE("hex packing") {
    CHECK(io::hex_pack(fv(2, {1, 0, 1})) == "101");
    CHECK(io::hex_unpack("101", PrimeField(2), 3) == fv(2, {1, 0, 1}));
    CHECK(io::hex_unpack(io::hex_pack(fv(17, {16, 0, 3})), PrimeField(17), 3) == fv(17, {16, 0, 3}));
    CHECK_THROWS_AS(io::hex_unpack("12", PrimeField(2), 2), ValidationError);
}

TEST_CASE("table export round trip decodes identically") {
    const auto p = Poset::from_covers(4, {{1, 3}, {1, 4}, {2, 4}});
    const auto c = code(2, {{1, 1, 1, 1}});
    const auto table = build_table(primary_decomposition(c, p), c, p);
    const auto back = io::table_from_json(json::parse(io::to_json(table).dump()), p);
    CHECK(back.total_entries() == table.total_entries());
    for (const auto& y : oracle::space(2, 4)) {
        const auto v = fv(2, std::vector<std::int64_t>(y.begin(), y.end()));
        CHECK(decode(back, v).codeword == decode(table, v).codeword);
    }
    auto broken = io::to_json(table);
    broken["components"][0]["leaders"]["1"] = "11";  // syndrome of 11 is 0
    CHECK_THROWS_AS(io::table_from_json(broken, p), ValidationError);
}

TEST_CASE("complexity serialisation") {
    CHECK(io::complexity_to_json(Complexity(8)) == json(8));
    CHECK(io::complexity_to_json(Complexity(1) << 70).is_string());
}

TEST_CASE("vector parsing") {
    CHECK(io::parse_vector("1,0,2", PrimeField(3)) == fv(3, {1, 0, 2}));
    CHECK_THROWS_AS(io::parse_vector("1,a", PrimeField(3)), ValidationError);
}
