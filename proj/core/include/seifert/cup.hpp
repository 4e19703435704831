/**
 * @file cup.hpp
 * @brief Alexander–Whitney cup products on the Delta-complex, projection to
 *        cellular cohomology and assembly of the full product table.
 */
#ifndef SEIFERT_CUP_HPP
#define SEIFERT_CUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "seifert/closedform.hpp"
#include "seifert/transfer.hpp"

namespace seifert {

/// (f ∪ g)(s) = f(front face of s) · g(back face of s), mod p.
SimplicialCochain aw_cup(const DeltaComplex& simp, const SimplicialCochain& f, const SimplicialCochain& g,
                         std::uint32_t p);

/// Quotient of cellular degree-d cocycles by coboundaries, with the given
/// cellular representatives as generators. nullopt if they are not a basis.
std::optional<QuotientBasis> cellular_quotient(const Workbench& wb, int degree,
                                               const std::vector<CellCochain>& generators);

/// Same for simplicial cochains with the given cocycles as generators.
std::optional<QuotientBasis> simplicial_quotient(const Workbench& wb, int degree,
                                                 const std::vector<SimplicialCochain>& generators);

/**
 * H² coordinates of a simplicial 2-cocycle from the values of T^t φ on
 * δ, μ_k, ν_j only. Uses the explicit Case rules for p = 2 and type o1,
 * and the cellular quotient otherwise. Throws LinalgError if the ρ-values
 * of T^t φ are not all zero.
 */
FpVector coefficient_method(const Workbench& wb, const ExpectedGroups& groups, const SimplicialCochain& phi);

/// H³ coordinate of a simplicial 3-cochain: (T^t c)(ε) + Σ (T^t c)(ζ_k).
std::uint32_t h3_coordinate(const Workbench& wb, const SimplicialCochain& c);

struct RingOptions {
    Variant variant = Variant::Theorem;
    /// Also evaluate products that vanish because H³ = 0 and check that
    /// they are coboundaries; check unit neutrality and commutativity.
    bool paranoid = false;
};

/// Computed table plus every failed internal check.
struct RingResult {
    ExpectedGroups groups;
    ProductTable table;
    std::vector<CocycleLift> lifts;  ///< in basis order, degrees 0..3
    std::vector<std::string> failures;
    /// Pairs where the coefficient method and the full projection disagree.
    std::vector<std::pair<std::string, std::string>> method_disagreements;
    bool basis_valid = true;
};

RingResult assemble_ring(const Workbench& wb, const RingOptions& options = {});

}  // namespace seifert

#endif
