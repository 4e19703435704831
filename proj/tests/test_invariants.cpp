#include <doctest.h>

#include <algorithm>

#include "seifert/invariants.hpp"

using namespace seifert;

TEST_CASE("parse normalizes the extra fiber") {
    const auto torus = parse("e=0;type=o1;g=1");
    CHECK(torus.type == SeifertType::O1);
    CHECK(torus.g == 1);
    REQUIRE(torus.fibers.size() == 1);
    CHECK(torus.fibers[0] == Fiber{1, 0});

    const auto sphere = parse("e=-1;type=o1;g=0;fibers=(2,1),(3,1),(5,1)");
    const std::vector<Fiber> want{{1, -1}, {2, 1}, {3, 1}, {5, 1}};
    CHECK(sphere.fibers == want);
}

TEST_CASE("parse rejects bad input") {
    CHECK_THROWS_AS(parse("e=0;type=n3;g=1"), InputError);
    CHECK_THROWS_AS(parse("e=0;type=n4;g=2"), InputError);
    CHECK_THROWS_AS(parse("e=0;type=o2;g=0"), InputError);
    CHECK_THROWS_AS(parse("e=0;type=o1;g=1;fibers=(4,2)"), InputError);
    CHECK_THROWS_AS(parse("e=0;type=o1;g=1;fibers=(3,0)"), InputError);
    CHECK_THROWS_AS(parse("e=0;type=q7;g=1"), InputError);
    CHECK_THROWS_AS(parse("garbage"), InputError);
    CHECK_THROWS_AS(parse("e=;type=o1;g=1"), InputError);
}

TEST_CASE("to_text round-trips through parse") {
    for (const char* s : {"e=0;type=o1;g=1", "e=-1;type=n4;g=3;fibers=(2,1),(4,3)", "e=2;type=n2;g=1;fibers=(3,-1)"}) {
        const auto inv = parse(s);
        CHECK(parse(inv.to_text()) == inv);
    }
}

TEST_CASE("derive: cases and constants") {
    const auto torus = parse("e=0;type=o1;g=1");
    const auto d = derive(torus, 3);
    CHECK(d.c == 0);
    CHECK(d.n == 0);
    CHECK(d.case_id == CaseId::Case1);

    const auto sphere = parse("e=-1;type=o1;g=0;fibers=(2,1),(3,1),(5,1)");
    const auto d7 = derive(sphere, 7);
    CHECK(d7.a == 30);
    CHECK(d7.c == 1);  // -30 + 15 + 10 + 6
    CHECK(d7.n == 0);
    CHECK(d7.case_id == CaseId::Case2);

    const auto d2 = derive(sphere, 2);
    CHECK(d2.n == 1);
    CHECK(d2.case_id == CaseId::Case3);
    REQUIRE(d2.fiber_order.size() == 4);
    CHECK(sphere.fibers[static_cast<std::size_t>(d2.fiber_order[0])] == Fiber{2, 1});
}

TEST_CASE("derive: p-valuation order is decreasing and stable") {
    const auto inv = parse("e=0;type=o1;g=0;fibers=(2,1),(4,1),(8,1),(6,1),(3,1)");
    const auto d = derive(inv, 2);
    CHECK(d.n == 4);
    std::vector<std::int64_t> order_a;
    for (int i : d.fiber_order) order_a.push_back(inv.fibers[static_cast<std::size_t>(i)].a);
    const std::vector<std::int64_t> want{8, 4, 2, 6, 1, 3};
    CHECK(order_a == want);
    auto sorted = d.fiber_order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("case is a function of n and c mod p") {
    for (std::int64_t e = -6; e <= 6; ++e) {
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            const auto inv = SeifertInvariants::make(e, SeifertType::N1, 1, {});
            const auto d = derive(inv, p);
            CHECK(d.case_id == (e % static_cast<std::int64_t>(p) == 0 ? CaseId::Case1 : CaseId::Case2));
        }
    }
}

TEST_CASE("epsilon signs per type") {
    using V = std::vector<int>;
    CHECK(SeifertInvariants::make(0, SeifertType::O1, 2, {}).eps_signs() == V{1, 1, 1, 1});
    CHECK(SeifertInvariants::make(0, SeifertType::O2, 1, {}).eps_signs() == V{-1, -1});
    CHECK(SeifertInvariants::make(0, SeifertType::N1, 2, {}).eps_signs() == V{1, 1});
    CHECK(SeifertInvariants::make(0, SeifertType::N2, 2, {}).eps_signs() == V{-1, -1});
    CHECK(SeifertInvariants::make(0, SeifertType::N3, 3, {}).eps_signs() == V{1, -1, -1});
    CHECK(SeifertInvariants::make(0, SeifertType::N4, 3, {}).eps_signs() == V{1, 1, -1});
}

TEST_CASE("primes and valuations") {
    CHECK(is_prime(2));
    CHECK(is_prime(2147483647ULL));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(valuation(24, 2) == 3);
    CHECK(valuation(-9, 3) == 2);
    CHECK(valuation(5, 3) == 0);
}

TEST_CASE("presentation of the fundamental group") {
    const auto text = presentation_pi1(parse("e=0;type=o1;g=0"));
    CHECK(text.find("q_0") != std::string::npos);
    CHECK(text.find("[q_0,h]") != std::string::npos);
    CHECK(presentation_pi1(parse("e=0;type=o1;g=1")).find("[v1,v2]") != std::string::npos);
    CHECK(presentation_pi1(parse("e=0;type=n1;g=2")).find("v1^2 v2^2") != std::string::npos);
}
