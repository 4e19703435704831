#include <doctest.h>

#include "seifert/closedform.hpp"

using namespace seifert;

using Dims = std::array<std::size_t, 4>;

TEST_CASE("rational reduction") {
    CHECK(reduce_mod(Rational(1, 2), 3) == 2);
    CHECK(reduce_mod(Rational(-1, 2), 5) == 2);
    CHECK(reduce_mod(Rational(7), 5) == 2);
    CHECK_THROWS(reduce_mod(Rational(1, 3), 3));
}

TEST_CASE("dimension table") {
    CHECK(table_dimensions(SeifertType::O1, CaseId::Case1, 1, 0, 3) == Dims{1, 3, 3, 1});
    CHECK(table_dimensions(SeifertType::O1, CaseId::Case2, 0, 0, 7) == Dims{1, 0, 0, 1});
    // O1 Case 3: H^1 = 2g + n - 1
    CHECK(table_dimensions(SeifertType::O1, CaseId::Case3, 2, 3, 3)[1] == 6);
    // N3, N4: H^2 = (g - 2) + n
    CHECK(table_dimensions(SeifertType::N3, CaseId::Case3, 4, 2, 3)[2] == 4);
    CHECK(table_dimensions(SeifertType::N4, CaseId::Case3, 4, 2, 3)[2] == 4);
    CHECK(table_dimensions(SeifertType::O2, CaseId::Case1, 1, 0, 3)[3] == 0);
    // p = 2: every type follows the O1 row, read in terms of g'
    for (auto t : {SeifertType::O2, SeifertType::N1, SeifertType::N2, SeifertType::N3, SeifertType::N4}) {
        for (auto c : {CaseId::Case1, CaseId::Case2, CaseId::Case3}) {
            const int g = is_orientable_base(t) ? 1 : 3;
            const int gp = is_orientable_base(t) ? 2 * g : g;
            CHECK(table_dimensions(t, c, g, 2, 2) == table_dimensions(SeifertType::N1, c, gp, 2, 2));
            if (gp % 2 == 0) CHECK(table_dimensions(t, c, g, 2, 2) == table_dimensions(SeifertType::O1, c, gp / 2, 2, 2));
        }
    }
}

TEST_CASE("generator inventories") {
    const auto g2 = expected_groups(parse("e=-1;type=o1;g=0;fibers=(2,1),(4,3)"), 2);
    CHECK(g2.case_id == CaseId::Case3);
    REQUIRE(g2.generators[1].size() == 1);
    CHECK(g2.generators[1][0].name == "alpha[1]");

    const auto o2 = expected_groups(parse("e=0;type=o2;g=2"), 3);
    CHECK(o2.case_id == CaseId::Case1);
    CHECK(o2.dims[3] == 0);
    const auto& phi3 = o2.generators[2][0];
    CHECK(phi3.name == "phi[3]");
    REQUIRE(phi3.cellular.size() == 2);

    const auto n4 = expected_groups(parse("e=1;type=n4;g=3"), 3);
    bool found = false;
    for (const auto& s : n4.generators[2]) {
        if (s.name != "phi[3]") continue;
        found = true;
        using Term = std::pair<std::string, Rational>;
        CHECK(s.cellular == std::vector<Term>{{"nu[2]", Rational(1)}, {"nu[1]", Rational(-1)}});
    }
    CHECK(found);
}

TEST_CASE("closed-form ring is graded commutative") {
    for (const char* s : {"e=0;type=o1;g=1", "e=-1;type=n2;g=1;fibers=(3,1),(3,2)", "e=0;type=n1;g=2;fibers=(2,1),(4,3)",
                          "e=-1;type=o2;g=2"}) {
        for (std::uint32_t p : {2u, 3u, 5u}) {
            const auto t = expected_ring(parse(s), p);
            for (const auto& [key, value] : t.entries) {
                const auto& [x, y] = key;
                const auto partner = t.entries.find({y, x});
                REQUIRE(partner != t.entries.end());
                int dx = -1, dy = -1;
                for (int d = 0; d < 4; ++d) {
                    for (const auto& b : t.basis[static_cast<std::size_t>(d)]) {
                        if (b == x) dx = d;
                        if (b == y) dy = d;
                    }
                }
                const bool odd = (dx * dy) % 2 == 1;
                for (std::size_t i = 0; i < value.size(); ++i) {
                    const auto want = odd ? (p - value[i]) % p : value[i];
                    CHECK(partner->second[i] == want);
                }
            }
        }
    }
}

TEST_CASE("p = 2 Case 1 parametric entry") {
    // alpha^2 = (c/2) beta + sum_{eps_j = -1} phi_j; with e = 2 over N2, c = 2.
    const auto t = expected_ring(parse("e=2;type=n2;g=1"), 2);
    const auto& v = t.entries.at({"alpha", "alpha"});
    const auto& basis = t.basis[2];
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(v[i] == ((basis[i] == "beta" || basis[i] == "phi[1]") ? 1u : 0u));
}

TEST_CASE("class rendering") {
    CHECK(render_class({0, 0}, {"a", "b"}, 3) == "0");
    CHECK(render_class({1, 2}, {"a", "b"}, 3).find("b") != std::string::npos);
}
