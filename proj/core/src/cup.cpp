/**
 * @file cup.cpp
 * @brief Alexander–Whitney products and the product-table pipeline.
 */
#include "seifert/cup.hpp"

#include <algorithm>
#include <stdexcept>

namespace seifert {

SimplicialCochain aw_cup(const DeltaComplex& simp, const SimplicialCochain& f, const SimplicialCochain& g,
                         std::uint32_t p) {
    const int d = f.degree + g.degree;
    if (d > 3) throw std::invalid_argument("aw_cup: total degree exceeds 3");
    SimplicialCochain out(d, simp.count(d), p);
    for (std::size_t s = 0; s < simp.count(d); ++s) {
        const std::int64_t x = f.values[simp.front_face(d, s, f.degree)];
        if (mod_p(x, p) == 0) continue;
        const std::int64_t y = g.values[simp.back_face(d, s, g.degree)];
        out.values[s] = mul_mod(mod_p(x, p), mod_p(y, p), p);
    }
    return out;
}

namespace {

bool all_zero(const FpVector& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

/// Coboundaries of the unit (d-1)-cochains of a complex with boundary d_d.
std::vector<FpVector> unit_coboundaries(const SparseIntMatrix& bd, std::uint32_t p) {
    std::vector<FpVector> rows(bd.rows(), FpVector(bd.cols(), 0));
    for (std::size_t c = 0; c < bd.cols(); ++c) {
        for (const auto& [r, v] : bd.column(c)) rows[r][c] = add_mod(rows[r][c], mod_p(v, p), p);
    }
    return rows;
}

std::optional<QuotientBasis> make_quotient(std::size_t n, const SparseIntMatrix* into, const SparseIntMatrix* out_of,
                                           std::size_t dim, const std::vector<FpVector>& gens, std::uint32_t p) {
    QuotientBasis q(n, p);
    if (into != nullptr) {
        for (const auto& r : unit_coboundaries(*into, p)) q.add_relation(r);
    }
    for (const auto& v : gens) {
        if (out_of != nullptr && !all_zero(coboundary_fp(*out_of, v, p))) return std::nullopt;
        if (!q.add_generator(v)) return std::nullopt;
    }
    if (gens.size() != dim) return std::nullopt;
    return q;
}

std::size_t index_of(const std::vector<GeneratorSpec>& gens, const std::string& name) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].name == name) return i;
    }
    throw std::logic_error("generator " + name + " missing from basis");
}

}  // namespace

std::optional<QuotientBasis> cellular_quotient(const Workbench& wb, int degree,
                                               const std::vector<CellCochain>& generators) {
    const std::uint32_t p = wb.p();
    const CohomologyBasis h = cellular_cohomology(wb.cell, p);
    std::vector<FpVector> gens;
    for (const auto& g : generators) gens.push_back(g.fp(p));
    return make_quotient(wb.cell.count(degree), degree >= 1 ? &wb.cell.d(degree) : nullptr,
                         degree <= 2 ? &wb.cell.d(degree + 1) : nullptr, h.dims[static_cast<std::size_t>(degree)],
                         gens, p);
}

std::optional<QuotientBasis> simplicial_quotient(const Workbench& wb, int degree,
                                                 const std::vector<SimplicialCochain>& generators) {
    const std::uint32_t p = wb.p();
    const CohomologyBasis h = cellular_cohomology(wb.cell, p);
    std::vector<FpVector> gens;
    for (const auto& g : generators) gens.push_back(g.fp(p));
    return make_quotient(wb.simp.count(degree), degree >= 1 ? &wb.simp.d(degree) : nullptr,
                         degree <= 2 ? &wb.simp.d(degree + 1) : nullptr, h.dims[static_cast<std::size_t>(degree)],
                         gens, p);
}

FpVector coefficient_method(const Workbench& wb, const ExpectedGroups& groups, const SimplicialCochain& phi) {
    const std::uint32_t p = wb.p();
    const SeifertInvariants& w = wb.working;
    const CellComplex& cell = wb.cell;
    const FpVector v = transpose_T(wb.T, 2, phi.fp(p), p);
    auto at = [&](const std::string& label) { return v[cell.index(2, label)]; };
    for (int k = 0; k <= w.m(); ++k) {
        if (at(lbl("rho", k)) != 0) throw LinalgError("coefficient method: rho component of T^t phi is not zero");
    }
    const auto& gens = groups.generators[2];
    FpVector out(gens.size(), 0);
    const bool explicit_rules = p == 2 || w.type == SeifertType::O1;
    if (!explicit_rules) {
        std::vector<CellCochain> reps;
        for (const auto& s : gens) reps.push_back(cellular_representative(wb, s));
        const auto q = cellular_quotient(wb, 2, reps);
        if (!q) throw LinalgError("coefficient method: H2 basis is not a basis");
        return q->coords(v);
    }
    auto add = [&](const std::string& name, std::uint32_t c) {
        const std::size_t i = index_of(gens, name);
        out[i] = add_mod(out[i], c, p);
    };
    for (int j = 1; j <= w.gp(); ++j) add(lbl("phi", j), at(lbl("nu", j)));
    const int n = wb.derived.n;
    switch (wb.derived.case_id) {
        case CaseId::Case1: {
            std::uint32_t x = at("delta");
            for (int k = 0; k <= w.m(); ++k) {
                const std::uint32_t inv_a = inv_mod(mod_p(w.fibers[static_cast<std::size_t>(k)].a, p), p);
                x = sub_mod(x, mul_mod(at(lbl("mu", k)), inv_a, p), p);
            }
            add("beta", x);
            break;
        }
        case CaseId::Case2: break;
        case CaseId::Case3: {
            const std::uint32_t r0 = at(lbl("mu", 0));
            const std::uint32_t s = mul_mod(r0, inv_mod(mod_p(w.fibers[0].b, p), p), p);
            for (int k = 1; k < n; ++k) {
                const std::uint32_t bk = mod_p(w.fibers[static_cast<std::size_t>(k)].b, p);
                add(lbl("beta", k), sub_mod(at(lbl("mu", k)), mul_mod(s, bk, p), p));
            }
            break;
        }
    }
    return out;
}

std::uint32_t h3_coordinate(const Workbench& wb, const SimplicialCochain& c) {
    const std::uint32_t p = wb.p();
    const FpVector v = transpose_T(wb.T, 3, c.fp(p), p);
    std::uint32_t s = v[wb.cell.index(3, "eps")];
    for (int k = 0; k <= wb.working.m(); ++k) s = add_mod(s, v[wb.cell.index(3, lbl("zeta", k))], p);
    return s;
}

RingResult assemble_ring(const Workbench& wb, const RingOptions& options) {
    const std::uint32_t p = wb.p();
    RingResult res;
    res.groups = expected_groups(wb.input, p, options.variant);
    res.table = empty_product_table(res.groups);
    const auto& G = res.groups.generators;

    // Basis check on the cellular side.
    for (int d = 0; d <= 3; ++d) {
        std::vector<CellCochain> reps;
        for (const auto& s : G[static_cast<std::size_t>(d)]) reps.push_back(cellular_representative(wb, s));
        if (!cellular_quotient(wb, d, reps)) {
            res.basis_valid = false;
            res.failures.push_back("degree " + std::to_string(d) + " generators are not a basis of H^" +
                                   std::to_string(d));
        }
    }
    if (!res.basis_valid) return res;

    std::array<std::vector<SimplicialCochain>, 4> R;
    for (int d = 0; d <= 3; ++d) {
        for (const auto& s : G[static_cast<std::size_t>(d)]) {
            CocycleLift lift = lift_generator(wb, s);
            const auto defects = lift_defects(wb, lift);
            if (!defects.empty()) {
                for (const auto& m : defects) res.failures.push_back("lift " + m);
                lift.simplicial = solve_lift(wb, lift.cellular);
                lift.from_solver = true;
            }
            R[static_cast<std::size_t>(d)].push_back(lift.simplicial);
            res.lifts.push_back(std::move(lift));
        }
    }

    const auto q2 = simplicial_quotient(wb, 2, R[2]);
    const auto q3 = simplicial_quotient(wb, 3, R[3]);
    if (!q2 || !q3) {
        res.failures.push_back("simplicial lifts do not form a basis");
        return res;
    }

    // H1 x H1
    for (std::size_t i = 0; i < G[1].size(); ++i) {
        for (std::size_t j = 0; j < G[1].size(); ++j) {
            const std::string& x = G[1][i].name;
            const std::string& y = G[1][j].name;
            const SimplicialCochain phi = aw_cup(wb.simp, R[1][i], R[1][j], p);
            if (!all_zero(coboundary_fp(wb.simp.d(3), phi.fp(p), p))) {
                res.failures.push_back("product " + x + " * " + y + " is not a cocycle");
                continue;
            }
            FpVector coeff;
            try {
                coeff = coefficient_method(wb, res.groups, phi);
            } catch (const LinalgError& e) {
                res.failures.push_back("product " + x + " * " + y + ": " + e.what());
                continue;
            }
            const auto full = q2->try_coords(phi.fp(p));
            if (!full || *full != coeff) res.method_disagreements.push_back({x, y});
            res.table.entries[{x, y}] = coeff;
        }
    }
    for (std::size_t i = 0; i < G[1].size(); ++i) {
        for (std::size_t j = 0; j < G[1].size(); ++j) {
            const auto& a = res.table.entries[{G[1][i].name, G[1][j].name}];
            FpVector neg = res.table.entries[{G[1][j].name, G[1][i].name}];
            for (auto& c : neg) c = sub_mod(0, c, p);
            if (a != neg) {
                res.failures.push_back("products " + G[1][i].name + ", " + G[1][j].name + " do not anticommute");
            }
        }
    }

    // H1 x H2 and H2 x H1
    const bool h3 = !G[3].empty();
    if (h3 || options.paranoid) {
        for (std::size_t i = 0; i < G[1].size(); ++i) {
            for (std::size_t j = 0; j < G[2].size(); ++j) {
                const std::string& x = G[1][i].name;
                const std::string& y = G[2][j].name;
                const SimplicialCochain c12 = aw_cup(wb.simp, R[1][i], R[2][j], p);
                const SimplicialCochain c21 = aw_cup(wb.simp, R[2][j], R[1][i], p);
                if (!h3) {
                    if (!q3->in_relation_span(c12.fp(p)) || !q3->in_relation_span(c21.fp(p))) {
                        res.failures.push_back("product " + x + " * " + y + " is not a coboundary although H^3 = 0");
                    }
                    continue;
                }
                const FpVector v12{h3_coordinate(wb, c12)};
                const FpVector v21{h3_coordinate(wb, c21)};
                res.table.entries[{x, y}] = v12;
                res.table.entries[{y, x}] = v21;
                if (v12 != v21) res.failures.push_back("products " + x + ", " + y + " do not commute");
                if (options.paranoid) {
                    const auto f12 = q3->try_coords(c12.fp(p));
                    if (!f12 || *f12 != v12) res.method_disagreements.push_back({x, y});
                }
            }
        }
    }

    if (options.paranoid) {
        // 1 is neutral.
        for (int d = 1; d <= 2; ++d) {
            const auto q = d == 1 ? simplicial_quotient(wb, 1, R[1]) : q2;
            if (!q) {
                res.failures.push_back("degree 1 lifts do not form a basis");
                continue;
            }
            for (std::size_t i = 0; i < R[static_cast<std::size_t>(d)].size(); ++i) {
                FpVector unit(R[static_cast<std::size_t>(d)].size(), 0);
                unit[i] = 1;
                const auto& r = R[static_cast<std::size_t>(d)][i];
                const auto left = q->try_coords(aw_cup(wb.simp, R[0][0], r, p).fp(p));
                const auto right = q->try_coords(aw_cup(wb.simp, r, R[0][0], p).fp(p));
                if (!left || !right || *left != unit || *right != unit) {
                    res.failures.push_back("1 is not neutral for " + G[static_cast<std::size_t>(d)][i].name);
                }
            }
        }
    }
    return res;
}

}  // namespace seifert
