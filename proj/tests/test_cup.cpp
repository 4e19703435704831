#include <doctest.h>

#include <random>

#include "seifert/cup.hpp"

using namespace seifert;

namespace {

SimplicialCochain random_cochain(const DeltaComplex& dx, int d, std::uint32_t p, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    SimplicialCochain c(d, dx.count(d), p);
    for (auto& v : c.values) v = dist(rng);
    return c;
}

SimplicialCochain cobound(const DeltaComplex& dx, const SimplicialCochain& c, std::uint32_t p) {
    return SimplicialCochain::from_fp(c.degree + 1, dx.d(c.degree + 1).apply_transpose(c.fp(p), p), p);
}

}  // namespace

TEST_CASE("Leibniz rule for random cochains") {
    const auto dx = build_delta_complex(parse("e=-1;type=n1;g=1;fibers=(3,2)"));
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 5u}) {
        for (int d1 = 0; d1 <= 2; ++d1) {
            for (int d2 = 0; d1 + d2 <= 2; ++d2) {
                const auto f = random_cochain(dx, d1, p, rng);
                const auto g = random_cochain(dx, d2, p, rng);
                auto lhs = cobound(dx, aw_cup(dx, f, g, p), p);
                auto rhs = aw_cup(dx, cobound(dx, f, p), g, p);
                const std::int64_t sign = d1 % 2 == 0 ? 1 : -1;
                rhs.axpy(sign, aw_cup(dx, f, cobound(dx, g, p), p));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("cup with zero and with the unit") {
    const auto dx = build_delta_complex(parse("e=0;type=o1;g=1"));
    std::mt19937 rng(3);
    const auto f = random_cochain(dx, 1, 3, rng);
    CHECK(aw_cup(dx, f, SimplicialCochain(1, dx.count(1), 3), 3).is_zero());
    SimplicialCochain one(0, dx.count(0), 3);
    for (auto& v : one.values) v = 1;
    CHECK(aw_cup(dx, one, f, 3) == f);
    CHECK(aw_cup(dx, f, one, 3) == f);
    CHECK_THROWS(aw_cup(dx, random_cochain(dx, 2, 3, rng), random_cochain(dx, 2, 3, rng), 3));
}

TEST_CASE("3-torus: theta_1 cup theta_2 is beta for every prime") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const Workbench wb(parse("e=0;type=o1;g=1"), p);
        const auto r = assemble_ring(wb);
        CHECK(r.failures.empty());
        CHECK(r.method_disagreements.empty());
        const auto& basis = r.table.basis[2];
        const auto coords = r.table.entries.at({"theta[1]", "theta[2]"});
        for (std::size_t i = 0; i < basis.size(); ++i) CHECK(coords[i] == (basis[i] == "beta" ? 1u : 0u));
    }
}

TEST_CASE("coefficient method matches full evaluation and the closed form") {
    for (const char* s : {"e=0;type=o1;g=1;fibers=(2,1),(4,3)", "e=-1;type=n2;g=1;fibers=(3,1),(3,2)",
                          "e=0;type=n4;g=3", "e=-1;type=o2;g=1;fibers=(2,1),(3,1),(5,1)"}) {
        for (std::uint32_t p : {2u, 3u, 5u}) {
            CAPTURE(s);
            CAPTURE(p);
            const Workbench wb(parse(s), p);
            const auto r = assemble_ring(wb, {Variant::Theorem, true});
            CHECK(r.basis_valid);
            CHECK(r.failures.empty());
            CHECK(r.method_disagreements.empty());
            CHECK(table_differences(r.table, expected_ring(wb.input, p)).empty());
        }
    }
}

TEST_CASE("h3 coordinate of the top generator") {
    const Workbench wb(parse("e=0;type=o1;g=1"), 3);
    CHECK(h3_coordinate(wb, wb.simp.hat(3, wb.simp.label(3, 0), 3)) <= 2u);
}

TEST_CASE("quotients reject dependent generators") {
    const Workbench wb(parse("e=0;type=o1;g=1"), 3);
    const auto t1 = wb.cell.hat(1, "t[1]", 3);
    CHECK_FALSE(cellular_quotient(wb, 1, {t1, t1}).has_value());
}
