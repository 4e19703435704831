#include <doctest.h>

#include "fixtures.hpp"
#include "seifert/cellular.hpp"
#include "seifert/closedform.hpp"
#include "seifert/simplicial.hpp"

using namespace seifert;

namespace {

std::size_t torsion_divisible(const IntegralHomologyGroup& h, std::uint32_t p) {
    std::size_t n = 0;
    for (const auto& t : h.torsion) {
        if (t % p == 0) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("cellular coboundary formulas") {
    const auto inv = parse("e=1;type=n2;g=2;fibers=(3,2)");
    const auto cx = build_cell_complex(inv);
    // q_k -> delta + a_k mu_k
    const auto dq = cell_coboundary(cx, cx.hat(1, "q[1]"));
    auto want = cx.hat(2, "delta");
    want.axpy(3, cx.hat(2, "mu[1]"));
    CHECK(dq == want);
    // h -> sum b_k mu_k + 2 sum_{eps_j = -1} nu_j
    auto want_h = cx.hat(2, "mu[0]");
    want_h.axpy(2, cx.hat(2, "mu[1]"));
    want_h.axpy(2, cx.hat(2, "nu[1]"));
    want_h.axpy(2, cx.hat(2, "nu[2]"));
    CHECK(cell_coboundary(cx, cx.hat(1, "h")) == want_h);
    CHECK(cell_coboundary(cx, cx.hat(0, "sigma")).is_zero());
    CHECK_THROWS(cell_coboundary(cx, cx.hat(3, "eps")));
}

TEST_CASE("3-torus") {
    const auto inv = parse("e=0;type=o1;g=1");
    const auto dx = build_delta_complex(inv);
    const auto cx = build_cell_complex(inv);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        CHECK(simplicial_cohomology(dx, p).dims == std::array<std::size_t, 4>{1, 3, 3, 1});
        CHECK(cellular_cohomology(cx, p).dims == std::array<std::size_t, 4>{1, 3, 3, 1});
    }
    const auto h = simplicial_integral_homology(dx);
    CHECK(h[0].rank == 1);
    CHECK(h[1].rank == 3);
    CHECK(h[2].rank == 3);
    CHECK(h[3].rank == 1);
    for (const auto& g : h) CHECK(g.torsion.empty());
}

TEST_CASE("Poincare homology sphere") {
    const auto inv = parse("e=-1;type=o1;g=0;fibers=(2,1),(3,1),(5,1)");
    const auto dx = build_delta_complex(inv);
    const auto h = simplicial_integral_homology(dx);
    CHECK(h[1].rank == 0);
    CHECK(h[1].torsion.empty());
    CHECK(h[2].rank == 0);
    CHECK(h[3].rank == 1);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(simplicial_cohomology(dx, p).dims == std::array<std::size_t, 4>{1, 0, 0, 1});
}

TEST_CASE("first homology order equals |c| for pairwise coprime fibers over the sphere") {
    // With pairwise coprime a_k, |H_1| = |e a_1...a_m + sum b_k prod_{i != k} a_i| = |c|.
    const auto inv = parse("e=0;type=o1;g=0;fibers=(2,1),(3,1),(5,1)");
    const auto h = simplicial_integral_homology(build_delta_complex(inv));
    CHECK(h[1].rank == 0);
    BigInt order = 1;
    for (const auto& t : h[1].torsion) order *= t;
    CHECK(order == 31);
}

TEST_CASE("small extra fixture with c = 2") {
    const auto inv = parse("e=0;type=o1;g=0;fibers=(3,1),(3,1)");
    CHECK(derive(inv, 2).c == 2);
    const auto dx = build_delta_complex(inv);
    CHECK(face_identity_violations(dx).empty());
    CHECK(dx.euler_characteristic() == 0);
    const auto cx = build_cell_complex(inv);
    for (std::uint32_t p : {2u, 3u, 5u}) CHECK(simplicial_cohomology(dx, p).dims == cellular_cohomology(cx, p).dims);
}

TEST_CASE("corpus: complexes are sound and agree") {
    for (const auto& inv : test_fixtures()) {
        CAPTURE(inv.to_text());
        const auto dx = build_delta_complex(inv);
        const auto cx = build_cell_complex(inv);
        CHECK(face_identity_violations(dx).empty());
        CHECK(dx.euler_characteristic() == 0);
        for (int d = 1; d < 3; ++d) {
            CHECK((dx.d(d) * dx.d(d + 1)).is_zero());
            CHECK((cx.d(d) * cx.d(d + 1)).is_zero());
        }
        const auto hs = simplicial_integral_homology(dx);
        CHECK(hs == cellular_integral_homology(cx));
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const auto dims = simplicial_cohomology(dx, p).dims;
            CHECK(dims == cellular_cohomology(cx, p).dims);
            // universal coefficients from integral homology
            CHECK(dims[0] == 1);
            for (std::size_t k = 1; k < 4; ++k) {
                CHECK(dims[k] == hs[k].rank + torsion_divisible(hs[k], p) + torsion_divisible(hs[k - 1], p));
            }
            if (p == 2) CHECK(dims[3] == 1);
        }
    }
}

TEST_CASE("type-specific top cohomology") {
    CHECK(cellular_cohomology(build_cell_complex(parse("e=0;type=o2;g=1")), 3).dims[3] == 0);
    CHECK(cellular_cohomology(build_cell_complex(parse("e=0;type=n1;g=1")), 2).dims ==
          std::array<std::size_t, 4>{1, 2, 2, 1});
}

TEST_CASE("export dump lists every simplex") {
    const auto dx = build_delta_complex(parse("e=0;type=o1;g=1"));
    const auto text = export_complex(dx);
    for (int d = 0; d < 4; ++d) {
        for (std::size_t i = 0; i < dx.count(d); ++i) CHECK(text.find(dx.label(d, i)) != std::string::npos);
    }
}
