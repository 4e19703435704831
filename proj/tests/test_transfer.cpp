#include <doctest.h>

#include "fixtures.hpp"
#include "seifert/transfer.hpp"

using namespace seifert;

TEST_CASE("T on selected cells") {
    const Workbench wb(parse("e=-1;type=n3;g=2;fibers=(5,2)"), 3);
    const auto& cell = wb.cell;
    const auto& simp = wb.simp;
    for (long k = 0; k <= wb.working.m(); ++k) {
        const auto col = cell.index(2, lbl("rho", k));
        CHECK(wb.T[2].get(simp.index(2, lbl("rho1", k)), col) == 1);
        CHECK(wb.T[2].get(simp.index(2, lbl("rho2", k)), col) == -1);
    }
    for (int j = 1; j <= wb.working.gp(); ++j) {
        const auto col = cell.index(2, lbl("nu", j));
        CHECK(wb.T[2].get(simp.index(2, lbl("nu1", j)), col) == 1);
        CHECK(wb.T[2].get(simp.index(2, lbl("nu2", j)), col) == -wb.working.eps(j));
    }
}

TEST_CASE("transpose of T on basis cochains") {
    const Workbench wb(parse("e=0;type=o1;g=1;fibers=(2,1)"), 5);
    for (long k = 0; k <= wb.working.m(); ++k) {
        CHECK(transpose_T(wb.T, wb.simp.hat(2, lbl("rho1", k))) == wb.cell.hat(2, lbl("rho", k)));
    }
    CHECK(transpose_T(wb.T, wb.simp.hat(2, "delta[0]")) == wb.cell.hat(2, "delta"));
}

TEST_CASE("transpose of T commutes with coboundaries") {
    const Workbench wb(parse("e=-1;type=o2;g=1;fibers=(3,1),(3,2)"), 3);
    for (int d = 0; d < 3; ++d) {
        for (std::size_t i = 0; i < wb.simp.count(d); i += 3) {
            SimplicialCochain x(d, wb.simp.count(d));
            x.values[i] = 1;
            const auto lhs = cell_coboundary(wb.cell, transpose_T(wb.T, x));
            SimplicialCochain dx(d + 1, wb.simp.count(d + 1));
            dx.values = wb.simp.d(d + 1).apply_transpose(x.values);
            CHECK(lhs == transpose_T(wb.T, dx));
        }
    }
}

TEST_CASE("the lift of delta is U_0") {
    const Workbench wb(parse("e=0;type=o1;g=1"), 3);
    const auto u = lift_block(wb, LiftKind::Delta, 0);
    RationalCochain want(2, wb.simp.count(2));
    for (const char* s : {"delta[0]", "T+[0]", "T-[0]", "F[0]"}) want.values[wb.simp.index(2, s)] = 1;
    CHECK(u.values == want.values);
}

TEST_CASE("corpus: chain map, quasi-isomorphism, auxiliary identities, lifts") {
    for (const auto& inv : test_fixtures()) {
        for (std::uint32_t p : {2u, 3u, 5u}) {
            CAPTURE(inv.to_text());
            CAPTURE(p);
            const Workbench wb(inv, p);
            CHECK(chain_map_defects(wb.cell, wb.simp, wb.T).empty());
            CHECK(induces_isomorphism(wb.cell, wb.simp, wb.T, p));
            CHECK(aux_identity_defects(wb.simp, wb.aux).empty());
            const auto groups = expected_groups(wb.input, p);
            for (const auto& gens : groups.generators) {
                for (const auto& spec : gens) {
                    const auto lift = lift_generator(wb, spec);
                    CAPTURE(spec.name);
                    CHECK(lift_defects(wb, lift).empty());
                }
            }
        }
    }
}

TEST_CASE("solver lift is a section") {
    const Workbench wb(parse("e=0;type=o2;g=1"), 3);
    auto target = wb.cell.hat(2, "nu[1]", 3);
    target += wb.cell.hat(2, "nu[2]", 3);
    const auto r = solve_lift(wb, target);
    FpVector d = wb.simp.d(3).apply_transpose(r.fp(3), 3);
    for (auto v : d) CHECK(v == 0);
    CHECK(transpose_T(wb.T, 2, r.fp(3), 3) == target.fp(3));
}
