#include <doctest.h>

#include "oracles.hpp"
#include "pmetric/error.hpp"
#include "pmetric/isometry.hpp"

using namespace pmetric;
using oracle::code;
using oracle::fv;

namespace {

Poset pa() { return Poset::from_covers(4, {{1, 3}, {1, 4}, {2, 4}}); }

std::vector<oracle::Vec> rows_of(const Matrix& m) {
    std::vector<oracle::Vec> out;
    for (const auto& r : m.row_vectors()) out.push_back(oracle::to_vec(r));
    return out;
}

}  // namespace

TEST_CASE("chain sweep map") {
    const PrimeField f2(2);
    const auto a = chain_sweep_matrix(f2, 4);
    const PIsometry t(Poset::chain(4), identity_permutation(4), a);
    CHECK(t.apply(fv(2, {1, 1, 1, 1})) == fv(2, {0, 0, 0, 1}));
    CHECK(t.sigma() == identity_permutation(4));
    CHECK(verify_isometry(Poset::chain(4), a));
    const auto id = PIsometry::identity(pa(), f2);
    CHECK(id.apply(fv(2, {1, 0, 1, 1})) == fv(2, {1, 0, 1, 1}));
}

TEST_CASE("construction rejects non-isometries") {
    const PrimeField f2(2);
    CHECK_THROWS_AS(PIsometry(Poset::chain(2), {2, 1}, Matrix::identity(f2, 2)), ValidationError);
    Matrix lower = Matrix::identity(f2, 2);
    lower(1, 0) = 1;
    CHECK_THROWS_AS(PIsometry(Poset::chain(2), {1, 2}, lower), ValidationError);
    Matrix zero_diag = Matrix::identity(f2, 2);
    zero_diag(0, 0) = 0;
    CHECK_THROWS_AS(PIsometry(Poset::antichain(2), {1, 2}, zero_diag), ValidationError);
}

TEST_CASE("verify_isometry") {
    const PrimeField f2(2), f3(3);
    const auto swap = Matrix::from_rows(f2, 2, {fv(2, {0, 1}), fv(2, {1, 0})});
    CHECK_FALSE(verify_isometry(Poset::chain(2), swap));
    Matrix diag = Matrix::identity(f3, 4);
    diag(1, 1) = 2;
    diag(3, 3) = 2;
    CHECK(verify_isometry(pa(), diag));
    CHECK(verify_isometry(Poset::antichain(4), diag));
}

TEST_CASE("group size matches brute-force isometry count") {
    CHECK(group_size(pa(), PrimeField(2)) == 8);
    CHECK(group_size(Poset::antichain(4), PrimeField(2)) == 24);
    CHECK(group_size(Poset::chain(2), PrimeField(3)) == 12);
    CHECK(oracle::isometries(oracle::relation_of(pa()), 2).size() == 8);
    CHECK(oracle::isometries(oracle::relation_of(Poset::antichain(4)), 2).size() == 24);
    CHECK(oracle::isometries(oracle::relation_of(Poset::chain(2)), 3).size() == 12);
    CHECK(oracle::isometries(oracle::relation_of(Poset::hierarchical({1, 2})), 3).size() ==
          group_size(Poset::hierarchical({1, 2}), PrimeField(3)));
}

TEST_CASE("enumerated group equals brute-force isometries") {
    for (const auto& p : {pa(), Poset::hierarchical({2, 1}), Poset::chain(3), Poset::from_covers(3, {{1, 2}})}) {
        const auto rel = oracle::relation_of(p);
        const auto want = oracle::isometries(rel, 2);
        std::set<std::vector<oracle::Vec>> wanted(want.begin(), want.end()), got;
        for (const auto& t : enumerate(p, PrimeField(2))) {
            got.insert(rows_of(t.matrix()));
            for (const auto& x : oracle::space(2, p.size())) {
                std::vector<std::int64_t> e(x.begin(), x.end());
                CHECK(t.matrix().apply(fv(2, e)) == t.apply(fv(2, e)));
            }
        }
        CHECK(got == wanted);
    }
    CHECK(enumerate(Poset::antichain(3), PrimeField(2)).size() == 6);
    CHECK_THROWS_AS(enumerate(Poset::chain(6), PrimeField(3), 1000), ResourceError);
}

TEST_CASE("indexed access is consistent with streaming") {
    const IsometryGroup g(pa(), PrimeField(3));
    CHECK(g.size() == group_size(pa(), PrimeField(3)));
    std::uint64_t count = 0;
    g.for_each(5, 20, [&](std::uint64_t i, const PIsometry& t) {
        CHECK(t == g.at(i));
        ++count;
    });
    CHECK(count == 15);
}

TEST_CASE("permutation part of an isometry") {
    const PrimeField f2(2);
    const auto h = Poset::hierarchical({2, 2});
    const PIsometry pure(h, {2, 1, 3, 4}, Matrix::identity(f2, 4));
    CHECK(pure.sigma() == Permutation{2, 1, 3, 4});
    CHECK(pure.apply(fv(2, {1, 0, 0, 0})) == fv(2, {0, 1, 0, 0}));
    Matrix a = Matrix::identity(f2, 4);
    a(0, 3) = 1;
    const PIsometry mixed(h, {1, 2, 4, 3}, a);
    CHECK(mixed.sigma() == Permutation{1, 2, 4, 3});
    CHECK(strip_to_triangular(mixed).sigma() == identity_permutation(4));
    CHECK(verify_isometry(h, mixed.matrix()));
}

TEST_CASE("applying to a code") {
    const PIsometry t(Poset::chain(4), identity_permutation(4), chain_sweep_matrix(PrimeField(2), 4));
    CHECK(t.apply_code(code(2, {{1, 1, 1, 1}})) == code(2, {{0, 0, 0, 1}}));
}
