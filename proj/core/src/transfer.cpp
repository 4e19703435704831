/**
 * @file transfer.cpp
 * @brief Chain map T, auxiliary cochains and cocycle lifts.
 */
#include "seifert/transfer.hpp"

#include <map>
#include <stdexcept>

namespace seifert {

namespace {

/// Column builder for one cell's image.
class Column {
public:
    Column(const DeltaComplex& simp, int dim) : simp_(simp), dim_(dim) {}
    void add(const std::string& label, std::int64_t c) {
        if (c != 0) entries_[simp_.index(dim_, label)] += c;
    }
    void write(SparseIntMatrix& m, std::size_t col) const {
        for (const auto& [r, v] : entries_) {
            if (v != 0) m.add(r, col, v);
        }
    }

private:
    const DeltaComplex& simp_;
    int dim_;
    std::map<std::size_t, std::int64_t> entries_;
};

/// Sign of the l-th polygon piece in T(delta) and T(eps): (+,+,-,-) blocks
/// on the handle part of an orientable base, + elsewhere.
int polygon_sign(const SeifertInvariants& inv, long l) {
    if (!is_orientable_base(inv.type) || l >= inv.star()) return 1;
    return (l % 4 <= 1) ? 1 : -1;
}

std::map<std::size_t, std::int64_t> column_map(const SparseIntMatrix& m, std::size_t c) {
    std::map<std::size_t, std::int64_t> out;
    for (const auto& [r, v] : m.column(c)) out[r] += v;
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace

ChainMap build_T(const CellComplex& cell, const DeltaComplex& simp) {
    const SeifertInvariants& inv = cell.inv;
    if (!(inv == simp.inv)) throw std::invalid_argument("build_T: complexes built from different invariants");
    const long m = inv.m();
    const long gp = inv.gp();
    const long star = inv.star();
    const long L = star + m + 1;
    ChainMap out;
    for (int d = 0; d <= 3; ++d) out.T[static_cast<std::size_t>(d)] = SparseIntMatrix(simp.count(d), cell.count(d));
    auto put = [&](int d, const std::string& cell_label, const Column& col) {
        col.write(out.T[static_cast<std::size_t>(d)], cell.index(d, cell_label));
    };

    {
        Column c(simp, 0);
        c.add("sigma", 1);
        put(0, "sigma", c);
    }
    for (std::size_t i = 0; i < cell.count(1); ++i) {
        Column c(simp, 1);
        c.add(cell.cells.label(1, i), 1);
        put(1, cell.cells.label(1, i), c);
    }

    // degree 2
    {
        Column c(simp, 2);
        for (long l = 0; l < L; ++l) c.add(lbl("delta", l), polygon_sign(inv, l));
        put(2, "delta", c);
    }
    for (long k = 0; k <= m; ++k) {
        Column c(simp, 2);
        c.add(lbl("rho1", k), 1);
        c.add(lbl("rho2", k), -1);
        put(2, lbl("rho", k), c);
    }
    for (long j = 1; j <= gp; ++j) {
        Column c(simp, 2);
        c.add(lbl("nu1", j), 1);
        c.add(lbl("nu2", j), -inv.eps(static_cast<int>(j)));
        put(2, lbl("nu", j), c);
    }
    for (long k = 0; k <= m; ++k) {
        const PavementWord& W = simp.words[static_cast<std::size_t>(k)];
        const bool negative = inv.fibers[static_cast<std::size_t>(k)].b < 0;
        Column c(simp, 2);
        for (long l = 1; l <= W.z; ++l) c.add(lbl("mu", k, l), (negative && l > 1) ? -1 : 1);
        put(2, lbl("mu", k), c);
    }

    // degree 3
    {
        Column c(simp, 3);
        for (long k = 0; k <= m; ++k) {
            c.add(lbl("R1", k), 1);
            c.add(lbl("R2", k), -1);
        }
        for (long l = 0; l < L; ++l) {
            const int s = polygon_sign(inv, l);
            c.add(lbl("D+", l), s);
            c.add(lbl("D-", l), -s);
        }
        for (long j = 1; j <= gp; ++j) {
            const std::string n1 = lbl("N1", j), n2 = lbl("N2", j), np1 = lbl("N'1", j), np2 = lbl("N'2", j);
            switch (inv.type) {
                case SeifertType::O1:
                    c.add(n1, 1);
                    c.add(n2, -1);
                    c.add(np1, -1);
                    c.add(np2, 1);
                    break;
                case SeifertType::O2: {
                    const int s = (j % 2 == 0) ? 1 : -1;
                    c.add(n1, s);
                    c.add(n2, s);
                    c.add(np1, s);
                    c.add(np2, s);
                    break;
                }
                default:
                    if (inv.eps(static_cast<int>(j)) == 1) {
                        c.add(n1, 1);
                        c.add(n2, -1);
                        c.add(np1, 1);
                        c.add(np2, -1);
                    } else {
                        c.add(n1, -1);
                        c.add(n2, -1);
                        c.add(np1, 1);
                        c.add(np2, 1);
                    }
                    break;
            }
        }
        put(3, "eps", c);
    }
    for (long k = 0; k <= m; ++k) {
        const PavementWord& W = simp.words[static_cast<std::size_t>(k)];
        const bool negative = inv.fibers[static_cast<std::size_t>(k)].b < 0;
        Column c(simp, 3);
        c.add(lbl("R'1", k), -1);
        c.add(lbl("R'2", k), 1);
        for (long l = 1; l <= W.z; ++l) {
            const int s = (negative && l > 1) ? -1 : 1;
            c.add(lbl("M+", k, l), s);
            c.add(lbl("M-", k, l), -s);
        }
        put(3, lbl("zeta", k), c);
    }
    return out;
}

std::vector<std::string> chain_map_defects(const CellComplex& cell, const DeltaComplex& simp,
                                           const ChainMap& t) {
    std::vector<std::string> out;
    for (int d = 1; d <= 3; ++d) {
        const SparseIntMatrix lhs = simp.d(d) * t[d];
        const SparseIntMatrix rhs = t[d - 1] * cell.d(d);
        for (std::size_t c = 0; c < cell.count(d); ++c) {
            if (column_map(lhs, c) != column_map(rhs, c)) out.push_back(cell.cells.label(d, c));
        }
    }
    return out;
}

CellCochain transpose_T(const ChainMap& t, const SimplicialCochain& x) {
    const SparseIntMatrix& m = t[x.degree];
    CellCochain out(x.degree, m.cols(), x.modulus);
    const auto y = m.apply_transpose(x.values);
    for (std::size_t i = 0; i < y.size(); ++i) out.add(i, y[i]);
    return out;
}

FpVector transpose_T(const ChainMap& t, int degree, const FpVector& x, std::uint32_t p) {
    return t[degree].apply_transpose(x, p);
}

bool induces_isomorphism(const CellComplex& cell, const DeltaComplex& simp, const ChainMap& t,
                         std::uint32_t p) {
    const CohomologyBasis hs = simplicial_cohomology(simp, p);
    const CohomologyBasis hc = cellular_cohomology(cell, p);
    for (int d = 0; d <= 3; ++d) {
        const auto du = static_cast<std::size_t>(d);
        if (hs.dims[du] != hc.dims[du]) return false;
        QuotientBasis q(cell.count(d), p);
        for (const auto& b : hc.coboundaries[du]) q.add_relation(b);
        for (const auto& r : hs.representatives[du]) {
            if (!q.add_generator(transpose_T(t, d, r, p))) return false;
        }
    }
    return true;
}

RationalCochain& RationalCochain::axpy(const Rational& s, const RationalCochain& o) {
    if (o.values.size() != values.size() || o.degree != degree) {
        throw std::invalid_argument("RationalCochain: shape mismatch");
    }
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += s * o.values[i];
    return *this;
}

bool RationalCochain::is_zero() const {
    for (const auto& v : values) {
        if (v.numerator() != 0) return false;
    }
    return true;
}

FpVector RationalCochain::reduce(std::uint32_t p) const {
    FpVector out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = reduce_mod(values[i], p);
    return out;
}

RationalCochain coboundary(const DeltaComplex& simp, const RationalCochain& x) {
    if (x.degree < 0 || x.degree > 2) throw std::invalid_argument("coboundary: degree must be 0..2");
    const SparseIntMatrix& d = simp.d(x.degree + 1);
    RationalCochain out(x.degree + 1, d.cols());
    for (std::size_t c = 0; c < d.cols(); ++c) {
        Rational s(0);
        for (const auto& [r, v] : d.column(c)) s += Rational(v) * x.values[r];
        out.values[c] = s;
    }
    return out;
}

namespace {

/// Accumulates hat-cochains by label.
class Hat {
public:
    Hat(const DeltaComplex& simp, int dim) : simp_(simp), c_(dim, simp.count(dim)) {}
    Hat& add(const std::string& label, const Rational& v = Rational(1)) {
        c_.values[simp_.index(c_.degree, label)] += v;
        return *this;
    }
    Hat& add(const RationalCochain& x, const Rational& v = Rational(1)) {
        c_.axpy(v, x);
        return *this;
    }
    RationalCochain get() const { return c_; }

private:
    const DeltaComplex& simp_;
    RationalCochain c_;
};

long wrap(long l, long L) { return ((l % L) + L) % L; }

}  // namespace

AuxCochains build_aux(const DeltaComplex& simp) {
    const SeifertInvariants& inv = simp.inv;
    const long m = inv.m();
    const long L = inv.star() + m + 1;
    AuxCochains aux;
    for (long l = 0; l < L; ++l) {
        aux.U.push_back(Hat(simp, 2)
                            .add(lbl("F", l))
                            .add(lbl("delta", l))
                            .add(lbl("T+", l))
                            .add(lbl("T-", l))
                            .get());
    }
    for (long k = 0; k <= m; ++k) {
        const Fiber& f = inv.fibers[static_cast<std::size_t>(k)];
        const PavementWord& W = simp.words[static_cast<std::size_t>(k)];
        const long z = W.z;
        auto Sk = [&](long l) { return lbl("Sk", k, l); };
        auto P = [&](long l) { return lbl("p", k, l); };
        Hat Y(simp, 2), Z(simp, 1), V(simp, 1);
        Y.add(lbl("G", k)).add(lbl("X", k, 1)).add(lbl("mu", k, 1));
        Z.add(lbl("q", k)).add(lbl("g", k));
        if (f.b > 0) {
            Y.add(lbl("H'", k));
            for (long l = 2; l <= z - W.w + 2; ++l) Y.add(lbl("P+", k, l), Rational(-1));
            Z.add(lbl("C+", k), Rational(-W.v)).add(Sk(0));
            V.add(lbl("C+", k), Rational(W.u)).add(Sk(0));
            for (long l = 2; l <= z; ++l) {
                const Rational nq(W.count_from(l, 'Q')), nh(W.count_from(l, 'H'));
                Z.add(Sk(l), -nq).add(P(l), -nq);
                V.add(Sk(l), nh).add(P(l), nh);
            }
        } else {
            Y.add(lbl("Q", k));
            V.add(lbl("C+", k)).add(Sk(0));
            for (long l = 2; l <= z; ++l) {
                const Rational c(z - l + 1);
                V.add(Sk(l), -c).add(P(l), -c);
            }
        }
        aux.Y.push_back(Y.get());
        aux.Z.push_back(Z.get());
        aux.V.push_back(V.get());
    }
    return aux;
}

std::vector<std::string> aux_identity_defects(const DeltaComplex& simp, const AuxCochains& aux) {
    const SeifertInvariants& inv = simp.inv;
    std::vector<std::string> out;
    for (long k = 0; k <= inv.m(); ++k) {
        const auto ku = static_cast<std::size_t>(k);
        const Fiber& f = inv.fibers[ku];
        const PavementWord& W = simp.words[ku];
        RationalCochain lhs = coboundary(simp, aux.Z[ku]);
        lhs -= aux.U[static_cast<std::size_t>(inv.star() + k)];
        lhs.axpy(Rational(-f.a), aux.Y[ku]);
        if (!lhs.is_zero()) out.push_back(lbl("Z", k));

        Hat sum(simp, 2);
        for (long i = 1; i <= W.z; ++i) {
            if (W.x(i) == 'H') sum.add(lbl("X", k, i)).add(lbl("mu", k, i));
        }
        RationalCochain rhs = Hat(simp, 2)
                                  .add(aux.Y[ku], Rational(f.b))
                                  .add(lbl("H'", k), Rational(-1))
                                  .add(lbl("G", k), Rational(-1))
                                  .add(coboundary(simp, aux.V[ku]))
                                  .get();
        rhs -= sum.get();
        if (!rhs.is_zero()) out.push_back(lbl("V", k));
    }
    return out;
}

Workbench::Workbench(const SeifertInvariants& inv, std::uint32_t p)
    : input(inv),
      derived(derive(inv, p)),
      working(reordered(inv, derived.fiber_order)),
      cell(build_cell_complex(working)),
      simp(build_delta_complex(working)),
      T(build_T(cell, simp)),
      aux(build_aux(simp)) {}

namespace {

/// e_l + S+_l + S-_l, the cone column over the l-th polygon vertex.
RationalCochain cone(const DeltaComplex& simp, long l) {
    const long L = simp.inv.star() + simp.inv.m() + 1;
    const long w = wrap(l, L);
    return Hat(simp, 1).add(lbl("e", w)).add(lbl("S+", w)).add(lbl("S-", w)).get();
}

RationalCochain t_lift(const DeltaComplex& simp, int j) {
    const SeifertInvariants& inv = simp.inv;
    Hat h(simp, 1);
    h.add(lbl("t", j)).add(lbl("f", j));
    if (is_orientable_base(inv.type)) {
        const long l = (j % 2 == 1) ? 2L * j : 2L * j - 1;
        h.add(cone(simp, l)).add(cone(simp, l - 1));
    } else {
        h.add(cone(simp, 2L * j - 1));
    }
    return h.get();
}

RationalCochain tf(const DeltaComplex& simp, int j) {
    return Hat(simp, 1).add(lbl("t", j)).add(lbl("f", j)).get();
}

RationalCochain tdiff_lift(const DeltaComplex& simp, int j) {
    Hat h(simp, 1);
    if (j == 1) return h.get();
    h.add(tf(simp, j)).add(tf(simp, 1), Rational(-1));
    for (long u = 2; u <= 2L * j - 2; ++u) h.add(cone(simp, u), Rational(-2));
    h.add(cone(simp, 1), Rational(-1)).add(cone(simp, 2L * j - 1), Rational(-1));
    return h.get();
}

RationalCochain qdiff_lift(const Workbench& wb, int k) {
    const long star = wb.working.star();
    Hat h(wb.simp, 1);
    h.add(wb.aux.Z[static_cast<std::size_t>(k)]).add(wb.aux.Z[0], Rational(-1));
    for (long i = 1; i <= k; ++i) h.add(cone(wb.simp, star + i), Rational(-1));
    return h.get();
}

RationalCochain qhalf_lift(const Workbench& wb, int k) {
    const int g = wb.working.g;
    Hat h(wb.simp, 1);
    h.add(wb.aux.Z[static_cast<std::size_t>(k)]);
    h.add(tf(wb.simp, g), Rational(-1, 2));
    h.add(cone(wb.simp, 2L * g - 1), Rational(-1, 2));
    for (long i = 0; i <= k; ++i) h.add(cone(wb.simp, 2L * g + i), Rational(-1));
    return h.get();
}

RationalCochain alpha_lift(const Workbench& wb) {
    const SeifertInvariants& w = wb.working;
    const DeltaComplex& simp = wb.simp;
    const long star = w.star();
    const std::int64_t a = wb.derived.a;
    Hat h(simp, 1);
    h.add("h").add("A+");
    for (int j = 1; j <= w.gp(); ++j) h.add(lbl("f", j));
    for (long l = 0; l < star + w.m() + 1; ++l) h.add(lbl("S+", l));
    std::int64_t partial = 0;
    for (int k = 0; k <= w.m(); ++k) {
        const Fiber& f = w.fibers[static_cast<std::size_t>(k)];
        h.add(lbl("g", k));
        h.add(wb.aux.Z[static_cast<std::size_t>(k)], -Rational(f.b, f.a));
        h.add(wb.aux.V[static_cast<std::size_t>(k)], Rational(-1));
        if (k >= 1) h.add(cone(simp, star + k), -Rational(partial, a));
        partial += f.b * (a / f.a);
    }
    if (w.type == SeifertType::N1 && wb.p() != 2) {
        const Rational s(wb.derived.c, 2 * a);
        h.add(tf(simp, 1), s).add(cone(simp, 1), -s).add(cone(simp, 0), -2 * s);
    }
    return h.get();
}

RationalCochain nu_lift(const DeltaComplex& simp, int j) {
    Hat h(simp, 2);
    h.add(lbl("nu1", j));
    const long L = simp.inv.star() + simp.inv.m() + 1;
    auto H = [&](long l) { return lbl("H", wrap(l, L)); };
    auto F = [&](long l) { return lbl("F", wrap(l, L)); };
    if (is_orientable_base(simp.inv.type)) {
        if (j % 2 == 1) {
            h.add(H(2L * j - 1)).add(F(2L * j - 1)).add(H(2L * j));
        } else {
            h.add(H(2L * j - 1)).add(F(2L * j - 2)).add(H(2L * j - 2));
        }
    } else {
        h.add(H(2L * j - 1)).add(F(2L * j - 1));
    }
    return h.get();
}

}  // namespace

RationalCochain lift_block(const Workbench& wb, LiftKind kind, int index) {
    const DeltaComplex& simp = wb.simp;
    switch (kind) {
        case LiftKind::One: {
            Hat h(simp, 0);
            for (std::size_t i = 0; i < simp.count(0); ++i) h.add(simp.label(0, i));
            return h.get();
        }
        case LiftKind::T: return t_lift(simp, index);
        case LiftKind::TDiff: return tdiff_lift(simp, index);
        case LiftKind::Alpha: return alpha_lift(wb);
        case LiftKind::QDiff: return qdiff_lift(wb, index);
        case LiftKind::QHalf: return qhalf_lift(wb, index);
        case LiftKind::Delta: return wb.aux.U[0];
        case LiftKind::Mu: return wb.aux.Y[static_cast<std::size_t>(index)];
        case LiftKind::Nu: return nu_lift(simp, index);
    }
    throw std::logic_error("unknown lift kind");
}

CellCochain cellular_representative(const Workbench& wb, const GeneratorSpec& spec) {
    const std::uint32_t p = wb.p();
    CellCochain c(spec.degree, wb.cell.count(spec.degree), p);
    for (const auto& [label, coeff] : spec.cellular) {
        c.add(wb.cell.index(spec.degree, label), reduce_mod(coeff, p));
    }
    return c;
}

SimplicialCochain solve_lift(const Workbench& wb, const CellCochain& target) {
    const std::uint32_t p = wb.p();
    const int d = target.degree;
    const std::size_t n = wb.simp.count(d);
    const std::size_t n_next = d < 3 ? wb.simp.count(d + 1) : 0;
    const std::size_t n_cell = wb.cell.count(d);
    PrimeFieldMatrix m(n_next + n_cell, n, p);
    FpVector rhs(n_next + n_cell, 0);
    if (d < 3) {
        const SparseIntMatrix& bd = wb.simp.d(d + 1);
        for (std::size_t c = 0; c < bd.cols(); ++c) {
            for (const auto& [r, v] : bd.column(c)) m.set(c, r, mod_p(v, p) + m(c, r));
        }
    }
    const SparseIntMatrix& t = wb.T[d];
    for (std::size_t c = 0; c < t.cols(); ++c) {
        for (const auto& [r, v] : t.column(c)) m.set(n_next + c, r, static_cast<std::int64_t>(mod_p(v, p)) + m(n_next + c, r));
        rhs[n_next + c] = mod_p(target.values[c], p);
    }
    const auto x = solve(m, rhs);
    if (!x) throw LinalgError("no cocycle lift of " + std::to_string(d) + "-cochain");
    return SimplicialCochain::from_fp(d, *x, p);
}

CocycleLift lift_generator(const Workbench& wb, const GeneratorSpec& spec) {
    CocycleLift out;
    out.spec = spec;
    out.cellular = cellular_representative(wb, spec);
    if (spec.lift.empty()) {
        out.simplicial = solve_lift(wb, out.cellular);
        out.from_solver = true;
        return out;
    }
    RationalCochain sum(spec.degree, wb.simp.count(spec.degree));
    for (const LiftTerm& t : spec.lift) sum.axpy(t.coeff, lift_block(wb, t.kind, t.index));
    out.simplicial = SimplicialCochain::from_fp(spec.degree, sum.reduce(wb.p()), wb.p());
    return out;
}

std::vector<std::string> lift_defects(const Workbench& wb, const CocycleLift& lift) {
    std::vector<std::string> out;
    const std::uint32_t p = wb.p();
    const int d = lift.spec.degree;
    const FpVector x = lift.simplicial.fp(p);
    if (d < 3) {
        const FpVector dx = coboundary_fp(wb.simp.d(d + 1), x, p);
        for (auto v : dx) {
            if (v != 0) {
                out.push_back(lift.spec.name + ": not a cocycle");
                break;
            }
        }
    }
    if (transpose_T(wb.T, d, x, p) != lift.cellular.fp(p)) out.push_back(lift.spec.name + ": T^t R differs from the cellular representative");
    return out;
}

}  // namespace seifert
