/**
 * @file cellular.cpp
 * @brief Boundary maps of the cellular decomposition.
 */
#include "seifert/cellular.hpp"

#include <stdexcept>

namespace seifert {

CellCochain CellComplex::hat(int d, const std::string& label, std::uint32_t p) const {
    CellCochain c(d, count(d), p);
    c.add(index(d, label), 1);
    return c;
}

CellComplex build_cell_complex(const SeifertInvariants& inv) {
    CellComplex cx;
    cx.inv = inv;
    const int m = inv.m();
    const int gp = inv.gp();
    const bool orientable_base = is_orientable_base(inv.type);
    GradedLabels& L = cx.cells;

    L.add(0, "sigma");
    for (int j = 1; j <= gp; ++j) L.add(1, lbl("t", j));
    for (int k = 0; k <= m; ++k) L.add(1, lbl("q", k));
    L.add(1, "h");
    L.add(2, "delta");
    for (int k = 0; k <= m; ++k) L.add(2, lbl("rho", k));
    for (int j = 1; j <= gp; ++j) L.add(2, lbl("nu", j));
    for (int k = 0; k <= m; ++k) L.add(2, lbl("mu", k));
    L.add(3, "eps");
    for (int k = 0; k <= m; ++k) L.add(3, lbl("zeta", k));

    cx.boundary[0] = SparseIntMatrix(L.count(0), L.count(1));
    cx.boundary[1] = SparseIntMatrix(L.count(1), L.count(2));
    cx.boundary[2] = SparseIntMatrix(L.count(2), L.count(3));

    // Every 1-cell is a loop at sigma, so d_1 = 0.
    SparseIntMatrix& d2 = cx.boundary[1];
    const std::size_t delta = L.index(2, "delta");
    for (int k = 0; k <= m; ++k) d2.add(L.index(1, lbl("q", k)), delta, 1);
    if (!orientable_base) {
        for (int j = 1; j <= gp; ++j) d2.add(L.index(1, lbl("t", j)), delta, 2);
    }
    for (int j = 1; j <= gp; ++j) {
        if (inv.eps(j) == -1) d2.add(L.index(1, "h"), L.index(2, lbl("nu", j)), 2);
    }
    for (int k = 0; k <= m; ++k) {
        const Fiber& f = inv.fibers[static_cast<std::size_t>(k)];
        const std::size_t mu = L.index(2, lbl("mu", k));
        d2.add(L.index(1, lbl("q", k)), mu, f.a);
        d2.add(L.index(1, "h"), mu, f.b);
    }

    SparseIntMatrix& d3 = cx.boundary[2];
    const std::size_t eps = L.index(3, "eps");
    for (int k = 0; k <= m; ++k) {
        d3.add(L.index(2, lbl("rho", k)), eps, 1);
        d3.add(L.index(2, lbl("rho", k)), L.index(3, lbl("zeta", k)), -1);
    }
    for (int j = 1; j <= gp; ++j) {
        const std::size_t nu = L.index(2, lbl("nu", j));
        if (inv.type == SeifertType::O2) {
            d3.add(nu, eps, (j % 2 == 0) ? 2 : -2);
        } else if (!orientable_base && inv.eps(j) == 1) {
            d3.add(nu, eps, 2);
        }
    }
    return cx;
}

CellCochain cell_coboundary(const CellComplex& cx, const CellCochain& x) {
    if (x.degree < 0 || x.degree > 2) throw std::invalid_argument("cell_coboundary: degree must be 0..2");
    const SparseIntMatrix& d = cx.d(x.degree + 1);
    CellCochain out(x.degree + 1, d.cols(), x.modulus);
    const auto y = d.apply_transpose(x.values);
    for (std::size_t i = 0; i < y.size(); ++i) out.add(i, y[i]);
    return out;
}

CohomologyBasis cellular_cohomology(const CellComplex& cx, std::uint32_t p) {
    return cohomology_from_boundaries({cx.count(0), cx.count(1), cx.count(2), cx.count(3)},
                                      {&cx.boundary[0], &cx.boundary[1], &cx.boundary[2]}, p);
}

std::array<IntegralHomologyGroup, 4> cellular_integral_homology(const CellComplex& cx) {
    return integral_homology({cx.count(0), cx.count(1), cx.count(2), cx.count(3)},
                             {&cx.boundary[0], &cx.boundary[1], &cx.boundary[2]});
}

}  // namespace seifert
