// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "seifert/cup.hpp"
#include "seifert/words.hpp"
#include "seifert_cli/cli.hpp"
#include "seifert_cli/corpus.hpp"

using namespace seifert;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<std::uint32_t> kPrimes{2, 3, 5};

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

Outcome words_criterion() {
    Outcome o;
    const auto t0 = Clock::now();
    int pairs = 0;
    for (std::int64_t a = 1; a <= 49; ++a) {
        for (std::int64_t b = 1; a + b <= 50; ++b) {
            if (std::gcd(a, b) != 1) continue;
            ++pairs;
            const auto w = build_word(a, b);
            const bool counts = w.count_from(1, 'Q') == a && w.count_from(1, 'H') == b && w.z == a + b;
            const bool window = a * w.u - b * w.v == 1 && w.u > 0 && w.u <= b && w.v >= 0 && w.v < a;
            if (!check_rotation_identity(w) || !counts || !window) {
                o.fail("(" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
        }
    }
    const double s = seconds_since(t0);
    if (s >= 1.0) o.fail("took " + std::to_string(s) + " s");
    if (o.ok) o.detail = std::to_string(pairs) + " pairs in " + std::to_string(s) + " s";
    return o;
}

Outcome chain_criterion(const std::vector<SeifertInvariants>& corpus) {
    Outcome o;
    const auto t0 = Clock::now();
    for (const auto& inv : corpus) {
        const auto cell = build_cell_complex(inv);
        const auto simp = build_delta_complex(inv);
        for (int d = 1; d < 3; ++d) {
            if (!(simp.d(d) * simp.d(d + 1)).is_zero()) o.fail(inv.to_text() + ": simplicial dd");
            if (!(cell.d(d) * cell.d(d + 1)).is_zero()) o.fail(inv.to_text() + ": cellular dd");
        }
        if (simp.euler_characteristic() != 0) o.fail(inv.to_text() + ": Euler characteristic");
        if (!chain_map_defects(cell, simp, build_T(cell, simp)).empty()) o.fail(inv.to_text() + ": chain map");
    }
    const double s = seconds_since(t0);
    if (s >= 10.0) o.fail("took " + std::to_string(s) + " s");
    if (o.ok) o.detail = std::to_string(corpus.size()) + " manifolds in " + std::to_string(s) + " s";
    return o;
}

Outcome groups_criterion(const std::vector<SeifertInvariants>& corpus) {
    Outcome o;
    for (const auto& inv : corpus) {
        const auto cell = build_cell_complex(inv);
        const auto simp = build_delta_complex(inv);
        for (auto p : kPrimes) {
            const auto d = derive(inv, p);
            const auto table = table_dimensions(inv.type, d.case_id, inv.g, d.n, p);
            if (simplicial_cohomology(simp, p).dims != table || cellular_cohomology(cell, p).dims != table) {
                o.fail(inv.to_text() + " p=" + std::to_string(p));
            }
        }
    }
    if (o.ok) o.detail = std::to_string(corpus.size() * kPrimes.size()) + " (fixture, prime) pairs";
    return o;
}

Outcome lift_criterion(const std::vector<SeifertInvariants>& corpus) {
    Outcome o;
    std::size_t lifts = 0;
    bool saw_pos = false, saw_neg = false, saw_zero = false;
    for (const auto& inv : corpus) {
        for (const auto& f : inv.fibers) {
            saw_pos = saw_pos || f.b > 0;
            saw_neg = saw_neg || f.b < 0;
            saw_zero = saw_zero || f.b == 0;
        }
        for (auto p : kPrimes) {
            const Workbench wb(inv, p);
            if (!aux_identity_defects(wb.simp, wb.aux).empty()) o.fail(inv.to_text() + ": auxiliary identity");
            for (const auto& gens : expected_groups(wb.input, p).generators) {
                for (const auto& spec : gens) {
                    const auto lift = lift_generator(wb, spec);
                    if (lift.from_solver) continue;  // no formula for this generator
                    ++lifts;
                    if (!lift_defects(wb, lift).empty()) {
                        o.fail(inv.to_text() + " p=" + std::to_string(p) + ": " + spec.name);
                    }
                }
            }
        }
    }
    if (!(saw_pos && saw_neg && saw_zero)) o.fail("corpus misses a sign regime of b_k");
    if (o.ok) o.detail = std::to_string(lifts) + " formula lifts, all three signs of b_k";
    return o;
}

struct RingSweep {
    Outcome ring;
    Outcome method;
};

RingSweep ring_criteria(const std::vector<SeifertInvariants>& corpus) {
    RingSweep r;
    std::size_t table_mismatch = 0, table_invalid = 0, products = 0;
    for (const auto& inv : corpus) {
        for (auto p : kPrimes) {
            const Workbench wb(inv, p);
            const auto res = assemble_ring(wb, {Variant::Theorem, false});
            const std::string where = inv.to_text() + " p=" + std::to_string(p);
            if (!res.basis_valid || !res.failures.empty()) r.ring.fail(where + ": pipeline");
            if (!table_differences(res.table, expected_ring(wb.input, p, Variant::Theorem)).empty()) {
                r.ring.fail(where);
            }
            if (!res.method_disagreements.empty()) r.method.fail(where);
            products += res.table.basis[1].size() * res.table.basis[1].size();

            const auto alt = assemble_ring(wb, {Variant::Table, false});
            if (!alt.basis_valid) {
                ++table_invalid;
            } else if (!table_differences(alt.table, expected_ring(wb.input, p, Variant::Table)).empty()) {
                ++table_mismatch;
            }
        }
    }
    if (r.ring.ok) {
        r.ring.detail = "theorem basis matches everywhere; caption basis invalid on " + std::to_string(table_invalid) +
                        ", differs on " + std::to_string(table_mismatch);
    }
    if (r.method.ok) r.method.detail = std::to_string(products) + " degree-one products";
    return r;
}

Outcome anchor_criterion() {
    Outcome o;
    using Dims = std::array<std::size_t, 4>;
    const auto torus = parse("e=0;type=o1;g=1");
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const Workbench wb(torus, p);
        if (simplicial_cohomology(wb.simp, p).dims != Dims{1, 3, 3, 1}) o.fail("torus dims p=" + std::to_string(p));
        const auto res = assemble_ring(wb);
        const auto& basis = res.table.basis[2];
        const auto& v = res.table.entries.at({"theta[1]", "theta[2]"});
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (v[i] != (basis[i] == "beta" ? 1u : 0u)) o.fail("torus product p=" + std::to_string(p));
        }
    }
    const auto sphere = parse("e=-1;type=o1;g=0;fibers=(2,1),(3,1),(5,1)");
    for (std::uint32_t p : {7u, 11u}) {
        const Workbench wb(sphere, p);
        const auto dims = simplicial_cohomology(wb.simp, p).dims;
        const auto expected = expected_groups(sphere, p);
        if (wb.derived.case_id != CaseId::Case2 || dims[1] != 0 || dims[2] != 0 || dims != expected.dims) {
            o.fail("Poincare sphere p=" + std::to_string(p));
        }
    }
    if (o.ok) o.detail = "3-torus for p in {2,3,5,7}; Poincare sphere for p in {7,11}";
    return o;
}

Outcome corpus_criterion() {
    Outcome o;
    const auto t0 = Clock::now();
    std::ostringstream out, err;
    const int code = cli::run({"verify-corpus", "--primes", "2,3,5", "--paranoid"}, out, err);
    const double s = seconds_since(t0);
    if (code != 0) o.fail("exit code " + std::to_string(code));
    if (s >= 300.0) o.fail("took " + std::to_string(s) + " s");
    if (o.ok) o.detail = "verify-corpus --paranoid in " + std::to_string(s) + " s";
    return o;
}

}  // namespace

int main() {
    const auto fixtures = cli::corpus();
    const auto sweep = ring_criteria(fixtures);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 word calculus", words_criterion},
        {"2 chain-level soundness", [&] { return chain_criterion(fixtures); }},
        {"3 group reproduction", [&] { return groups_criterion(fixtures); }},
        {"4 lift validity", [&] { return lift_criterion(fixtures); }},
        {"5 ring reproduction", [&] { return sweep.ring; }},
        {"6 method agreement", [&] { return sweep.method; }},
        {"7 sanity anchors", anchor_criterion},
        {"8 full corpus run", corpus_criterion},
    };
    bool all = true;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.ok;
        std::cout << (o.ok ? "PASS " : "FAIL ") << "criterion " << name << ": " << o.detail << '\n';
    }
    return all ? 0 : 1;
}
