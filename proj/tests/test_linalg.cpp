#include <doctest.h>

#include <numeric>
#include <random>

#include "seifert/linalg.hpp"

using namespace seifert;

TEST_CASE("modular arithmetic") {
    CHECK(mod_p(-1, 5) == 4);
    CHECK(mul_mod(4, 4, 5) == 1);
    CHECK(inv_mod(3, 7) == 5);
    CHECK(centered(4, 5) == -1);
    CHECK(add_mod(2147483646u, 2147483646u, 2147483647u) == 2147483645u);
}

TEST_CASE("rank over prime fields") {
    CHECK(rank(PrimeFieldMatrix::from_rows({{1, 0}, {0, 2}}, 2)) == 1);
    CHECK(rank(PrimeFieldMatrix::from_rows({{2, 4}, {6, 8}}, 5)) == 2);
    CHECK(rank(PrimeFieldMatrix::from_rows({{2, 4}, {6, 8}}, 2)) == 0);
    CHECK(rank(PrimeFieldMatrix(3, 4, 7)) == 0);
}

TEST_CASE("rref pivots and kernel") {
    const auto m = PrimeFieldMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 7);
    const auto r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    for (auto v : m.apply(ker[0])) CHECK(v == 0);
}

TEST_CASE("solve") {
    const auto m = PrimeFieldMatrix::from_rows({{1, 1}, {0, 1}}, 3);
    const auto x = solve(m, {2, 1});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == FpVector{2, 1});
    const auto singular = PrimeFieldMatrix::from_rows({{1, 1}, {1, 1}}, 3);
    CHECK_FALSE(solve(singular, {1, 2}).has_value());
}

TEST_CASE("quotient coordinates") {
    // Z/3-space of dim 3, cocycles span{e0, e1}, coboundaries span{e1}.
    const std::vector<FpVector> cocycles{{1, 0, 0}, {0, 1, 0}};
    const std::vector<FpVector> cobound{{0, 1, 0}};
    const std::vector<FpVector> gens{{1, 0, 0}};
    CHECK(quotient_coords({1, 0, 0}, gens, cobound, 3) == FpVector{1});
    CHECK(quotient_coords({2, 1, 0}, gens, cobound, 3) == FpVector{2});
    CHECK_THROWS(quotient_coords({0, 0, 1}, cocycles, cobound, 3));

    QuotientBasis q(3, 5);
    CHECK(q.add_relation({0, 1, 0}));
    CHECK(q.add_generator({1, 0, 0}));
    CHECK_FALSE(q.add_generator({1, 3, 0}));
    CHECK(q.coords({4, 2, 0}) == FpVector{4});
    CHECK(q.in_relation_span({0, 3, 0}));
    CHECK_FALSE(q.try_coords({0, 0, 1}).has_value());
}

TEST_CASE("smith normal form examples") {
    const auto snf = smith_normal_form(IntegerMatrix::from_rows({{2, 4}, {6, 8}}));
    CHECK(snf.diagonal == std::vector<BigInt>{2, 4});
    CHECK(smith_normal_form(IntegerMatrix::identity(3)).d == IntegerMatrix::identity(3));
    const auto zero = smith_normal_form(IntegerMatrix::from_rows({{0}}));
    CHECK(zero.diagonal.empty());
    CHECK(zero.d == IntegerMatrix::from_rows({{0}}));
}

TEST_CASE("smith normal form against gcd of minors on random 2x3 matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-12, 12);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<std::int64_t>> rows(2, std::vector<std::int64_t>(3));
        for (auto& r : rows) {
            for (auto& x : r) x = dist(rng);
        }
        const auto m = IntegerMatrix::from_rows(rows);
        const auto snf = smith_normal_form(m);
        CHECK(snf.u * m * snf.v == snf.d);
        CHECK(abs(determinant(snf.u)) == 1);
        CHECK(abs(determinant(snf.v)) == 1);

        std::int64_t g1 = 0;
        for (const auto& r : rows) {
            for (auto x : r) g1 = std::gcd(g1, x);
        }
        std::int64_t g2 = 0;
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) g2 = std::gcd(g2, rows[0][a] * rows[1][b] - rows[0][b] * rows[1][a]);
        }
        std::vector<BigInt> want;
        if (g1 != 0) want.push_back(g1);
        if (g2 != 0) want.push_back(g2 / g1);
        CHECK(snf.diagonal == want);
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(IntegerMatrix::from_rows({{2, 4}, {6, 8}})) == -8);
    CHECK(determinant(IntegerMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
}

TEST_CASE("sparse integer matrices") {
    SparseIntMatrix a(2, 2);
    a.add(0, 0, 1);
    a.add(1, 0, 2);
    a.add(0, 1, 3);
    a.add(0, 1, -3);
    CHECK(a.get(0, 1) == 0);
    CHECK(a.apply({1, 1}) == std::vector<std::int64_t>{1, 2});
    CHECK(a.apply_transpose(std::vector<std::int64_t>{1, 1}) == std::vector<std::int64_t>{3, 0});
    SparseIntMatrix b(2, 1);
    b.add(0, 0, 0);
    CHECK((a * b).is_zero());
    CHECK(a.to_fp(2)(1, 0) == 0);
}
