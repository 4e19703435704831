/**
 * @file cellular.hpp
 * @brief Cellular chain complex of a Seifert manifold: one 0-cell, the
 *        1-cells t_j, q_k, h, the 2-cells delta, rho_k, nu_j, mu_k and the
 *        3-cells eps, zeta_k.
 */
#ifndef SEIFERT_CELLULAR_HPP
#define SEIFERT_CELLULAR_HPP

#include <array>
#include <string>
#include <vector>

#include "seifert/complex.hpp"
#include "seifert/invariants.hpp"

namespace seifert {

/**
 * Labels: "sigma"; "t[j]" (j = 1..g'), "q[k]" (k = 0..m), "h";
 * "delta", "rho[k]", "nu[j]", "mu[k]"; "eps", "zeta[k]".
 */
struct CellComplex {
    SeifertInvariants inv;
    GradedLabels cells;
    /// boundary[d-1] maps C_d -> C_{d-1}.
    std::array<SparseIntMatrix, 3> boundary;

    std::size_t count(int d) const { return cells.count(d); }
    std::size_t index(int d, const std::string& label) const { return cells.index(d, label); }
    const SparseIntMatrix& d(int k) const { return boundary[static_cast<std::size_t>(k - 1)]; }

    /// Dual cochain of a single cell.
    CellCochain hat(int d, const std::string& label, std::uint32_t p = 0) const;
};

CellComplex build_cell_complex(const SeifertInvariants& inv);

/// Coboundary over Z (modulus 0) or Z_p; degree must be at most 2.
CellCochain cell_coboundary(const CellComplex& cx, const CellCochain& x);

CohomologyBasis cellular_cohomology(const CellComplex& cx, std::uint32_t p);

std::array<IntegralHomologyGroup, 4> cellular_integral_homology(const CellComplex& cx);

}  // namespace seifert

#endif
