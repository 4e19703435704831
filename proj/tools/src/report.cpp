/**
 * @file report.cpp
 * @brief check_fixture and report serialization.
 */
#include "seifert_cli/report.hpp"

#include <chrono>
#include <sstream>

#include "seifert/cup.hpp"
#include "seifert/transfer.hpp"

namespace seifert::cli {

namespace {

std::string join(const std::vector<std::string>& v, std::size_t limit = 6) {
    std::string out;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
        if (i) out += "; ";
        out += v[i];
    }
    if (v.size() > limit) out += "; ... (" + std::to_string(v.size()) + " total)";
    return out;
}

std::string dims_text(const std::array<std::size_t, 4>& d) {
    std::ostringstream os;
    os << '(' << d[0] << ',' << d[1] << ',' << d[2] << ',' << d[3] << ')';
    return os.str();
}

std::string formula_text(const GeneratorSpec& s) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, q] : s.cellular) {
        const bool neg = q < Rational(0);
        const Rational mag = neg ? -q : q;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << '-';
        if (mag != Rational(1)) {
            os << mag.numerator();
            if (mag.denominator() != 1) os << '/' << mag.denominator();
            os << ' ';
        }
        os << label << '^';
        first = false;
    }
    return first ? "0" : os.str();
}

std::vector<ProductEntry> product_entries(const ProductTable& computed, const ProductTable& expected) {
    std::vector<ProductEntry> out;
    auto emit = [&](int d1, int d2) {
        const auto& target = expected.basis[static_cast<std::size_t>(d1 + d2)];
        for (const auto& x : expected.basis[static_cast<std::size_t>(d1)]) {
            for (const auto& y : expected.basis[static_cast<std::size_t>(d2)]) {
                ProductEntry e;
                e.left = x;
                e.right = y;
                const auto ie = expected.entries.find({x, y});
                const auto ic = computed.entries.find({x, y});
                e.expected = ie == expected.entries.end() ? "-" : render_class(ie->second, target, expected.p);
                e.computed = ic == computed.entries.end() ? "-" : render_class(ic->second, target, expected.p);
                e.match = ie != expected.entries.end() && ic != computed.entries.end() && ie->second == ic->second;
                out.push_back(std::move(e));
            }
        }
    };
    emit(1, 1);
    emit(1, 2);
    emit(2, 1);
    return out;
}

bool ring_matches(const Workbench& wb, Variant v, bool paranoid) {
    RingOptions o;
    o.variant = v;
    o.paranoid = paranoid;
    const RingResult r = assemble_ring(wb, o);
    return r.basis_valid && table_differences(r.table, expected_ring(wb.input, wb.p(), v)).empty();
}

}  // namespace

RingReport check_fixture(const SeifertInvariants& inv, std::uint32_t p, const RunOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    RingReport r;
    r.invariants = inv.to_text();
    r.p = p;
    r.type = to_string(inv.type);
    r.variant = to_string(options.variant);
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        r.checks.push_back({name, ok, ok ? "" : detail});
        if (!ok) r.passed = false;
    };

    const Workbench wb(inv, p);
    r.case_id = static_cast<int>(wb.derived.case_id);
    try {
        const auto faces = face_identity_violations(wb.simp);
        const bool dd = (wb.simp.d(1) * wb.simp.d(2)).is_zero() && (wb.simp.d(2) * wb.simp.d(3)).is_zero() &&
                        (wb.cell.d(1) * wb.cell.d(2)).is_zero() && (wb.cell.d(2) * wb.cell.d(3)).is_zero();
        const long chi = wb.simp.euler_characteristic();
        check("complexes", faces.empty() && dd && chi == 0,
              "face identities: " + join(faces) + (dd ? "" : "; boundary of boundary is not zero") +
                  "; euler characteristic " + std::to_string(chi));

        check("chain-map", chain_map_defects(wb.cell, wb.simp, wb.T).empty(),
              "dT != Td on " + join(chain_map_defects(wb.cell, wb.simp, wb.T)));
        check("quasi-isomorphism", induces_isomorphism(wb.cell, wb.simp, wb.T, p));
        check("aux-identities", aux_identity_defects(wb.simp, wb.aux).empty(),
              join(aux_identity_defects(wb.simp, wb.aux)));

        r.dims_simplicial = simplicial_cohomology(wb.simp, p).dims;
        r.dims_cellular = cellular_cohomology(wb.cell, p).dims;
        const ExpectedGroups groups = expected_groups(inv, p, options.variant);
        r.dims_expected = groups.dims;
        const auto table_dims = table_dimensions(inv.type, wb.derived.case_id, inv.g, wb.derived.n, p);
        check("dimensions",
              r.dims_simplicial == r.dims_cellular && r.dims_cellular == r.dims_expected &&
                  table_dims == r.dims_expected,
              "simplicial " + dims_text(r.dims_simplicial) + ", cellular " + dims_text(r.dims_cellular) +
                  ", generators " + dims_text(r.dims_expected) + ", dimension table " + dims_text(table_dims));

        for (const auto& deg : groups.generators) {
            for (const auto& s : deg) r.generators.push_back({s.name, s.degree, formula_text(s), s.lift.empty() ? "solver" : "formula"});
        }
        if (options.groups_only) {
            r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            return r;
        }

        std::vector<std::string> lift_problems;
        for (const auto& deg : groups.generators) {
            for (const auto& s : deg) {
                if (s.lift.empty()) continue;
                try {
                    for (const auto& m : lift_defects(wb, lift_generator(wb, s))) lift_problems.push_back(m);
                } catch (const LinalgError& e) {
                    lift_problems.push_back(s.name + ": " + e.what());
                }
            }
        }
        check("lifts", lift_problems.empty(), join(lift_problems));

        RingOptions ro;
        ro.variant = options.variant;
        ro.paranoid = options.paranoid;
        const RingResult ring = assemble_ring(wb, ro);
        std::vector<std::string> internal;
        for (const auto& f : ring.failures) {
            if (f.rfind("lift ", 0) != 0) internal.push_back(f);
        }
        check("basis", ring.basis_valid, join(internal));
        if (ring.basis_valid) check("ring-internal", internal.empty(), join(internal));
        std::vector<std::string> disagree;
        for (const auto& [x, y] : ring.method_disagreements) disagree.push_back(x + "*" + y);
        check("method-agreement", disagree.empty(), join(disagree));

        const ProductTable expected = expected_ring(inv, p, options.variant);
        r.products = product_entries(ring.table, expected);
        std::vector<std::string> mismatched;
        for (const auto& e : r.products) {
            if (!e.match) mismatched.push_back(e.left + "*" + e.right + " = " + e.computed + " (expected " + e.expected + ")");
        }
        check("products", ring.basis_valid && mismatched.empty(), join(mismatched));

        const Variant other = options.variant == Variant::Theorem ? Variant::Table : Variant::Theorem;
        const bool this_ok = ring.basis_valid && mismatched.empty();
        const bool other_ok = ring_matches(wb, other, false);
        const bool theorem_ok = options.variant == Variant::Theorem ? this_ok : other_ok;
        const bool table_ok = options.variant == Variant::Table ? this_ok : other_ok;
        r.matching_variants = theorem_ok && table_ok ? "both" : theorem_ok ? "theorem" : table_ok ? "table" : "neither";
    } catch (const LinalgError& e) {
        check("pipeline", false, e.what());
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

void to_json(nlohmann::json& j, const CheckResult& c) {
    j = nlohmann::json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}
void from_json(const nlohmann::json& j, CheckResult& c) {
    j.at("name").get_to(c.name);
    j.at("passed").get_to(c.passed);
    j.at("detail").get_to(c.detail);
}
void to_json(nlohmann::json& j, const GeneratorEntry& g) {
    j = nlohmann::json{{"name", g.name}, {"degree", g.degree}, {"cellular", g.cellular}, {"lift", g.lift}};
}
void from_json(const nlohmann::json& j, GeneratorEntry& g) {
    j.at("name").get_to(g.name);
    j.at("degree").get_to(g.degree);
    j.at("cellular").get_to(g.cellular);
    j.at("lift").get_to(g.lift);
}
void to_json(nlohmann::json& j, const ProductEntry& e) {
    j = nlohmann::json{{"left", e.left}, {"right", e.right}, {"computed", e.computed}, {"expected", e.expected}, {"match", e.match}};
}
void from_json(const nlohmann::json& j, ProductEntry& e) {
    j.at("left").get_to(e.left);
    j.at("right").get_to(e.right);
    j.at("computed").get_to(e.computed);
    j.at("expected").get_to(e.expected);
    j.at("match").get_to(e.match);
}

void to_json(nlohmann::json& j, const RingReport& r) {
    j = nlohmann::json{{"invariants", r.invariants},
                       {"p", r.p},
                       {"type", r.type},
                       {"case", r.case_id},
                       {"variant", r.variant},
                       {"dims",
                        {{"simplicial", r.dims_simplicial}, {"cellular", r.dims_cellular}, {"expected", r.dims_expected}}},
                       {"generators", r.generators},
                       {"products", r.products},
                       {"checks", r.checks},
                       {"matching_variants", r.matching_variants},
                       {"verdict", r.passed ? "PASS" : "FAIL"},
                       {"elapsed_ms", r.elapsed_ms}};
}

void from_json(const nlohmann::json& j, RingReport& r) {
    j.at("invariants").get_to(r.invariants);
    j.at("p").get_to(r.p);
    j.at("type").get_to(r.type);
    j.at("case").get_to(r.case_id);
    j.at("variant").get_to(r.variant);
    j.at("dims").at("simplicial").get_to(r.dims_simplicial);
    j.at("dims").at("cellular").get_to(r.dims_cellular);
    j.at("dims").at("expected").get_to(r.dims_expected);
    j.at("generators").get_to(r.generators);
    j.at("products").get_to(r.products);
    j.at("checks").get_to(r.checks);
    j.at("matching_variants").get_to(r.matching_variants);
    r.passed = j.at("verdict").get<std::string>() == "PASS";
    j.at("elapsed_ms").get_to(r.elapsed_ms);
}

std::string render_text(const RingReport& r) {
    std::ostringstream os;
    os << r.invariants << "  p=" << r.p << "  type " << r.type << "  Case " << r.case_id << "  basis " << r.variant
       << '\n';
    os << "  dims " << dims_text(r.dims_simplicial) << " (simplicial), " << dims_text(r.dims_cellular)
       << " (cellular), " << dims_text(r.dims_expected) << " (expected)\n";
    for (int d = 0; d < 4; ++d) {
        os << "  H^" << d << ':';
        bool any = false;
        for (const auto& g : r.generators) {
            if (g.degree != d) continue;
            os << (any ? ", " : " ") << g.name << " = [" << g.cellular << ']';
            any = true;
        }
        if (!any) os << " 0";
        os << '\n';
    }
    std::size_t nonzero = 0;
    for (const auto& e : r.products) {
        if (e.computed == "0" && e.match) continue;
        if (nonzero++ == 0) os << "  products (nonzero or mismatched):\n";
        os << "    " << e.left << " * " << e.right << " = " << e.computed;
        if (!e.match) os << "   expected " << e.expected;
        os << '\n';
    }
    if (!r.products.empty() && nonzero == 0) os << "  all products of positive-degree generators vanish\n";
    for (const auto& c : r.checks) {
        os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
        if (!c.passed && !c.detail.empty()) os << ": " << c.detail;
        os << '\n';
    }
    if (!r.matching_variants.empty()) os << "  variants matching brute force: " << r.matching_variants << '\n';
    os << "  " << (r.passed ? "PASS" : "FAIL") << '\n';
    return os.str();
}

}  // namespace seifert::cli
