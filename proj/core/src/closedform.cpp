/**
 * @file closedform.cpp
 * @brief Transcription of the group theorem, the dimension table and the
 *        product tables.
 */
#include "seifert/closedform.hpp"

#include <algorithm>
#include <sstream>

#include "seifert/complex.hpp"

namespace seifert {

std::uint32_t reduce_mod(const Rational& q, std::uint32_t p) {
    const std::uint32_t den = mod_p(q.denominator(), p);
    if (den == 0) {
        throw LinalgError("denominator " + std::to_string(q.denominator()) + " is not invertible mod " +
                          std::to_string(p));
    }
    return mul_mod(mod_p(q.numerator(), p), inv_mod(den, p), p);
}

std::string to_string(Variant v) { return v == Variant::Theorem ? "theorem" : "table"; }

Variant parse_variant(const std::string& s) {
    if (s == "theorem") return Variant::Theorem;
    if (s == "table") return Variant::Table;
    throw InputError("unknown basis variant '" + s + "' (expected theorem or table)");
}

std::array<std::size_t, 4> table_dimensions(SeifertType type, CaseId case_id, int g, int n,
                                            std::uint32_t p) {
    const bool c1 = case_id == CaseId::Case1;
    const bool c3 = case_id == CaseId::Case3;
    long h1 = 0, h2 = 0, h3 = 1;
    const int gp = is_orientable_base(type) ? 2 * g : g;
    if (p == 2) type = SeifertType::O1;
    switch (type) {
        case SeifertType::O1:
            // p = 2 uses the o1 row with 2g replaced by g'.
            h1 = h2 = (p == 2 ? gp : 2 * g) + (c1 ? 1 : 0) + (c3 ? n - 1 : 0);
            break;
        case SeifertType::O2:
            h1 = 2 * g + (c3 ? n - 1 : 0);
            h2 = 2 * g - 2 + (c3 ? n : 1);
            h3 = 0;
            break;
        case SeifertType::N1:
            h1 = g - 1 + (c3 ? n : 1);
            h2 = g - 1 + (c3 ? n - 1 : 0);
            h3 = 0;
            break;
        case SeifertType::N2:
            h1 = g - 1 + n;
            h2 = g - 1 + n;
            break;
        case SeifertType::N3:
        case SeifertType::N4:
            h1 = g - 1 + n;
            h2 = g - 2 + n;
            h3 = 0;
            break;
    }
    return {1, static_cast<std::size_t>(h1), static_cast<std::size_t>(h2), static_cast<std::size_t>(h3)};
}

namespace {

using Terms = std::vector<std::pair<std::string, Rational>>;

GeneratorSpec gen(std::string name, int degree, GenKind kind, int index, Terms cellular,
                  std::vector<LiftTerm> lift) {
    GeneratorSpec s;
    s.name = std::move(name);
    s.degree = degree;
    s.kind = kind;
    s.index = index;
    s.cellular = std::move(cellular);
    s.lift = std::move(lift);
    return s;
}

Rational frac(std::int64_t num, std::int64_t den) { return Rational(num, den); }

/// Cellular representative of alpha: (c/2a) t_1 + h - sum b_k/a_k q_k, the
/// t_1 term present only for n1 with p > 2.
Terms alpha_terms(const SeifertInvariants& w, const DerivedConstants& d) {
    Terms t;
    if (w.type == SeifertType::N1 && d.p != 2 && d.c != 0) t.push_back({lbl("t", 1), frac(d.c, 2 * d.a)});
    t.push_back({"h", Rational(1)});
    for (int k = 0; k <= w.m(); ++k) {
        const Fiber& f = w.fibers[static_cast<std::size_t>(k)];
        if (f.b != 0) t.push_back({lbl("q", k), -frac(f.b, f.a)});
    }
    return t;
}

}  // namespace

ExpectedGroups expected_groups(const SeifertInvariants& inv, std::uint32_t p, Variant variant) {
    const DerivedConstants d = derive(inv, p);
    const SeifertInvariants w = reordered(inv, d.fiber_order);
    ExpectedGroups out;
    out.p = p;
    out.type = inv.type;
    out.case_id = d.case_id;
    out.variant = variant;
    const int gp = d.gp;
    const int g = inv.g;
    const int n = d.n;
    const CaseId cs = d.case_id;
    const bool table = variant == Variant::Table;
    const SeifertType ty = inv.type;
    auto& G = out.generators;

    G[0].push_back(gen("1", 0, GenKind::Unit, 0, {{"sigma", Rational(1)}}, {{LiftKind::One, 0, Rational(1)}}));

    const bool h3 = p == 2 || ty == SeifertType::O1 || ty == SeifertType::N2;
    if (h3) G[3].push_back(gen("gamma", 3, GenKind::Gamma, 0, {{"eps", Rational(1)}}, {}));

    auto theta_plain = [&] {
        for (int j = 1; j <= gp; ++j) {
            G[1].push_back(gen(lbl("theta", j), 1, GenKind::Theta, j, {{lbl("t", j), Rational(1)}},
                               {{LiftKind::T, j, Rational(1)}}));
        }
    };
    auto alpha = [&] {
        G[1].push_back(gen("alpha", 1, GenKind::Alpha, 0, alpha_terms(w, d), {{LiftKind::Alpha, 0, Rational(1)}}));
    };
    auto alpha_qdiff = [&] {
        for (int k = 1; k < n; ++k) {
            G[1].push_back(gen(lbl("alpha", k), 1, GenKind::AlphaK, k,
                               {{lbl("q", k), Rational(1)}, {lbl("q", 0), Rational(-1)}},
                               {{LiftKind::QDiff, k, Rational(1)}}));
        }
    };
    auto phi_plain = [&](int from) {
        for (int j = from; j <= gp; ++j) {
            G[2].push_back(gen(lbl("phi", j), 2, GenKind::Phi, j, {{lbl("nu", j), Rational(1)}},
                               {{LiftKind::Nu, j, Rational(1)}}));
        }
    };
    auto beta = [&] {
        G[2].push_back(gen("beta", 2, GenKind::Beta, 0, {{"delta", Rational(1)}}, {{LiftKind::Delta, 0, Rational(1)}}));
    };
    auto beta_k = [&](int from) {
        for (int k = from; k < n; ++k) {
            G[2].push_back(gen(lbl("beta", k), 2, GenKind::BetaK, k, {{lbl("mu", k), Rational(1)}},
                               {{LiftKind::Mu, k, Rational(1)}}));
        }
    };

    if (p == 2 || ty == SeifertType::O1) {
        theta_plain();
        if (cs == CaseId::Case1) alpha();
        if (cs == CaseId::Case3) alpha_qdiff();
        phi_plain(1);
        if (cs == CaseId::Case1) beta();
        if (cs == CaseId::Case3) beta_k(1);
    } else if (ty == SeifertType::O2) {
        theta_plain();
        if (cs == CaseId::Case3) alpha_qdiff();
        for (int j = 3; j <= gp; ++j) {
            // Theorem: nu_j + (-1)^j nu_1. The Case 2 caption drops the sign,
            // the Case 3 caption flips it.
            int s = (j % 2 == 0) ? 1 : -1;
            if (table && cs == CaseId::Case2) s = 1;
            if (table && cs == CaseId::Case3) s = -s;
            G[2].push_back(gen(lbl("phi", j), 2, GenKind::Phi, j,
                               {{lbl("nu", j), Rational(1)}, {lbl("nu", 1), Rational(s)}}, {}));
        }
        if (cs == CaseId::Case3) {
            beta_k(0);
        } else {
            beta();
        }
    } else {
        // Non-orientable bases, p > 2.
        const bool n2_table = table && ty == SeifertType::N2 && cs == CaseId::Case3;
        for (int j = 2; j <= g; ++j) {
            if (n2_table) {
                G[1].push_back(gen(lbl("theta", j), 1, GenKind::Theta, j,
                                   {{lbl("t", j), Rational(1)}, {lbl("t", g), Rational(-1)}},
                                   {{LiftKind::TDiff, j, Rational(1)}, {LiftKind::TDiff, g, Rational(-1)}}));
            } else {
                G[1].push_back(gen(lbl("theta", j), 1, GenKind::Theta, j,
                                   {{lbl("t", j), Rational(1)}, {lbl("t", 1), Rational(-1)}},
                                   {{LiftKind::TDiff, j, Rational(1)}}));
            }
        }
        if (ty == SeifertType::N1 && cs != CaseId::Case3) alpha();
        if (cs == CaseId::Case3) {
            for (int k = 0; k < n; ++k) {
                if (n2_table) {
                    // q_k - t_1/2 = (q_k - t_g/2) + (t_g - t_1)/2
                    G[1].push_back(gen(lbl("alpha", k), 1, GenKind::AlphaK, k,
                                       {{lbl("q", k), Rational(1)}, {lbl("t", 1), frac(-1, 2)}},
                                       {{LiftKind::QHalf, k, Rational(1)}, {LiftKind::TDiff, g, frac(1, 2)}}));
                } else {
                    G[1].push_back(gen(lbl("alpha", k), 1, GenKind::AlphaK, k,
                                       {{lbl("q", k), Rational(1)}, {lbl("t", g), frac(-1, 2)}},
                                       {{LiftKind::QHalf, k, Rational(1)}}));
                }
            }
        }
        switch (ty) {
            case SeifertType::N1:
                for (int j = 2; j <= g; ++j) {
                    G[2].push_back(gen(lbl("phi", j), 2, GenKind::Phi, j,
                                       {{lbl("nu", j), Rational(1)}, {lbl("nu", 1), Rational(-1)}}, {}));
                }
                if (cs == CaseId::Case3) beta_k(1);
                break;
            case SeifertType::N2:
                phi_plain(2);
                beta_k(0);
                break;
            case SeifertType::N3:
                phi_plain(3);
                beta_k(0);
                break;
            case SeifertType::N4:
                if (g >= 2) {
                    G[2].push_back(gen(lbl("phi", 3), 2, GenKind::Phi, 3,
                                       {{lbl("nu", 2), Rational(1)}, {lbl("nu", 1), Rational(-1)}}, {}));
                }
                phi_plain(4);
                beta_k(0);
                break;
            default: break;
        }
    }
    for (int deg = 0; deg < 4; ++deg) out.dims[static_cast<std::size_t>(deg)] = G[static_cast<std::size_t>(deg)].size();
    return out;
}

ProductTable empty_product_table(const ExpectedGroups& groups) {
    ProductTable t;
    t.p = groups.p;
    for (int deg = 0; deg < 4; ++deg) {
        for (const auto& s : groups.generators[static_cast<std::size_t>(deg)]) {
            t.basis[static_cast<std::size_t>(deg)].push_back(s.name);
        }
    }
    auto fill = [&](int d1, int d2) {
        const std::size_t target = t.basis[static_cast<std::size_t>(d1 + d2)].size();
        for (const auto& x : t.basis[static_cast<std::size_t>(d1)]) {
            for (const auto& y : t.basis[static_cast<std::size_t>(d2)]) {
                t.entries[{x, y}] = FpVector(target, 0);
            }
        }
    };
    fill(1, 1);
    fill(1, 2);
    fill(2, 1);
    return t;
}

namespace {

class TableWriter {
public:
    explicit TableWriter(ProductTable& t) : t_(t) {}

    bool has(int deg, const std::string& name) const {
        const auto& b = t_.basis[static_cast<std::size_t>(deg)];
        return std::find(b.begin(), b.end(), name) != b.end();
    }

    /// x ∪ y = sum of terms; also writes the graded-commutative partner.
    void set(int dx, const std::string& x, int dy, const std::string& y, const Terms& value) {
        if (!has(dx, x) || !has(dy, y)) return;
        const int target = dx + dy;
        FpVector v(t_.basis[static_cast<std::size_t>(target)].size(), 0);
        for (const auto& [name, q] : value) {
            if (!has(target, name)) continue;
            const auto& b = t_.basis[static_cast<std::size_t>(target)];
            const auto pos = static_cast<std::size_t>(std::find(b.begin(), b.end(), name) - b.begin());
            v[pos] = add_mod(v[pos], reduce_mod(q, t_.p), t_.p);
        }
        t_.entries[{x, y}] = v;
        FpVector w = v;
        if (dx * dy % 2 == 1) {
            for (auto& c : w) c = sub_mod(0, c, t_.p);
        }
        t_.entries[{y, x}] = w;
    }

private:
    ProductTable& t_;
};

}  // namespace

ProductTable expected_ring(const SeifertInvariants& inv, std::uint32_t p, Variant variant) {
    const ExpectedGroups groups = expected_groups(inv, p, variant);
    ProductTable t = empty_product_table(groups);
    const DerivedConstants d = derive(inv, p);
    const SeifertInvariants w = reordered(inv, d.fiber_order);
    TableWriter W(t);
    const int gp = d.gp;
    const int g = inv.g;
    const int n = d.n;
    const CaseId cs = d.case_id;
    const SeifertType ty = inv.type;
    const bool orientable = is_orientable_base(ty);
    const bool table = variant == Variant::Table;
    const Rational one(1), minus_one(-1);
    auto theta = [](int j) { return lbl("theta", j); };
    auto phi = [](int j) { return lbl("phi", j); };
    auto alpha_k = [](int k) { return lbl("alpha", k); };
    auto beta_k = [](int k) { return lbl("beta", k); };
    auto b_of = [&](int k) { return w.fibers[static_cast<std::size_t>(k)].b; };
    auto a_of = [&](int k) { return w.fibers[static_cast<std::size_t>(k)].a; };

    if (p == 2) {
        // theta x phi -> gamma: partner pairs on orientable bases, the diagonal otherwise.
        if (orientable) {
            for (int u = 1; 2 * u <= gp; ++u) {
                W.set(1, theta(2 * u), 2, phi(2 * u - 1), {{"gamma", one}});
                W.set(1, theta(2 * u - 1), 2, phi(2 * u), {{"gamma", one}});
            }
        } else {
            for (int j = 1; j <= gp; ++j) W.set(1, theta(j), 2, phi(j), {{"gamma", one}});
        }
        if (cs == CaseId::Case1) {
            if (orientable) {
                for (int u = 1; 2 * u <= gp; ++u) W.set(1, theta(2 * u), 1, theta(2 * u - 1), {{"beta", one}});
            } else {
                for (int j = 1; j <= gp; ++j) W.set(1, theta(j), 1, theta(j), {{"beta", one}});
            }
            Terms aa{{"beta", Rational(d.c, 2)}};
            for (int j = 1; j <= gp; ++j) {
                W.set(1, theta(j), 1, "alpha", {{phi(j), one}});
                if (w.eps(j) == -1) {
                    aa.push_back({phi(j), one});
                    W.set(1, "alpha", 2, phi(j), {{"gamma", one}});
                }
            }
            W.set(1, "alpha", 1, "alpha", aa);
            W.set(1, "alpha", 2, "beta", {{"gamma", one}});
        }
        if (cs == CaseId::Case3) {
            for (int k = 1; k < n; ++k) {
                for (int i = 1; i < n; ++i) {
                    Terms v;
                    for (int l = 1; l < n; ++l) v.push_back({beta_k(l), Rational(a_of(0), 2)});
                    if (i == k) v.push_back({beta_k(k), Rational(a_of(k), 2)});
                    W.set(1, alpha_k(k), 1, alpha_k(i), v);
                }
                W.set(1, alpha_k(k), 2, beta_k(k), {{"gamma", one}});
            }
        }
        return t;
    }

    switch (ty) {
        case SeifertType::O1:
            for (int u = 1; 2 * u <= gp; ++u) {
                W.set(1, theta(2 * u), 2, phi(2 * u - 1), {{"gamma", minus_one}});
                W.set(1, theta(2 * u - 1), 2, phi(2 * u), {{"gamma", one}});
            }
            if (cs == CaseId::Case1) {
                for (int u = 1; 2 * u <= gp; ++u) W.set(1, theta(2 * u - 1), 1, theta(2 * u), {{"beta", one}});
                for (int j = 1; j <= gp; ++j) W.set(1, theta(j), 1, "alpha", {{phi(j), one}});
                W.set(1, "alpha", 2, "beta", {{"gamma", one}});
            }
            if (cs == CaseId::Case3) {
                for (int k = 1; k < n; ++k) {
                    W.set(1, alpha_k(k), 2, beta_k(k), {{"gamma", Rational(1, b_of(k))}});
                    // The product table lists a -1/2 gamma here; the proof finds 0.
                    if (table && g >= 1) W.set(1, alpha_k(k), 2, phi(g), {{"gamma", Rational(-1, 2)}});
                }
            }
            break;
        case SeifertType::O2:
            if (cs != CaseId::Case3) {
                for (int u = 1; 2 * u <= gp; ++u) {
                    if (table && cs == CaseId::Case2) {
                        if (3 * u <= gp) W.set(1, theta(2 * u - 1), 1, theta(3 * u), {{"beta", one}});
                    } else {
                        W.set(1, theta(2 * u - 1), 1, theta(2 * u), {{"beta", one}});
                    }
                }
            }
            break;
        case SeifertType::N1:
            if (cs != CaseId::Case3) {
                for (int j = 2; j <= g; ++j) W.set(1, theta(j), 1, "alpha", {{phi(j), one}});
            }
            break;
        case SeifertType::N2:
            for (int j = 2; j <= g; ++j) W.set(1, theta(j), 2, phi(j), {{"gamma", one}});
            if (cs == CaseId::Case3) {
                for (int k = 0; k < n; ++k) {
                    W.set(1, alpha_k(k), 2, beta_k(k), {{"gamma", Rational(1, b_of(k))}});
                    // The proof states this for every k, the table for k >= 1.
                    if (g >= 2 && (!table || k >= 1)) {
                        W.set(1, alpha_k(k), 2, phi(g), {{"gamma", Rational(-1, 2)}});
                    }
                }
            }
            break;
        default: break;
    }
    return t;
}

std::string render_class(const FpVector& coords, const std::vector<std::string>& basis, std::uint32_t p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        const std::int64_t c = centered(coords[i], p);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        const std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1) os << mag << ' ';
        os << basis[i];
        first = false;
    }
    return first ? "0" : os.str();
}

std::vector<std::pair<std::string, std::string>> table_differences(const ProductTable& x,
                                                                   const ProductTable& y) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [key, v] : x.entries) {
        auto it = y.entries.find(key);
        if (it == y.entries.end() || it->second != v) out.push_back(key);
    }
    for (const auto& [key, v] : y.entries) {
        if (x.entries.find(key) == x.entries.end()) out.push_back(key);
    }
    return out;
}

}  // namespace seifert
