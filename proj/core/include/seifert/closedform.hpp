/**
 * @file closedform.hpp
 * @brief Closed-form answers: cohomology dimensions, the generator basis of
 *        every degree with its cellular representative, and the expected
 *        cup-product structure constants.
 *
 * Fiber indices in generator names (alpha[k], beta[k]) always refer to the
 * working order, i.e. the fibers after derive() has sorted them by
 * decreasing p-valuation.
 */
#ifndef SEIFERT_CLOSEDFORM_HPP
#define SEIFERT_CLOSEDFORM_HPP

#include <array>
#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seifert/invariants.hpp"
#include "seifert/linalg.hpp"

namespace seifert {

using Rational = boost::rational<std::int64_t>;

/// Residue of a rational number mod p; throws LinalgError if p divides
/// the denominator.
std::uint32_t reduce_mod(const Rational& q, std::uint32_t p);

/**
 * Two readings of the answer exist where the generator captions of the
 * product tables disagree with the group theorem, or where a table entry
 * disagrees with the corresponding proof.
 */
enum class Variant { Theorem, Table };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// Building blocks of explicit cocycle lifts.
enum class LiftKind {
    One,    ///< the 0-cocycle 1
    T,      ///< lift of t_j
    TDiff,  ///< lift of t_j - t_1 (non-orientable bases, p > 2)
    Alpha,  ///< lift of the alpha representative
    QDiff,  ///< lift of q_k - q_0
    QHalf,  ///< lift of q_k - t_g / 2 (non-orientable bases, p > 2)
    Delta,  ///< lift of delta
    Mu,     ///< lift of mu_k
    Nu      ///< lift of nu_j
};

struct LiftTerm {
    LiftKind kind = LiftKind::One;
    int index = 0;
    Rational coeff{1};
};

enum class GenKind { Unit, Theta, Alpha, AlphaK, Phi, Beta, BetaK, Gamma };

struct GeneratorSpec {
    std::string name;
    int degree = 0;
    GenKind kind = GenKind::Unit;
    int index = 0;
    /// Cellular representative as a combination of cell labels.
    std::vector<std::pair<std::string, Rational>> cellular;
    /// Explicit lift as a combination of building blocks; empty when no
    /// closed formula is available and the lift has to be solved for.
    std::vector<LiftTerm> lift;
};

struct ExpectedGroups {
    std::uint32_t p = 2;
    SeifertType type = SeifertType::O1;
    CaseId case_id = CaseId::Case1;
    Variant variant = Variant::Theorem;
    std::array<std::size_t, 4> dims{};
    std::array<std::vector<GeneratorSpec>, 4> generators;
};

/// Dimensions straight from the dimension table (g is the genus, n the
/// number of p-divisible a_k).
std::array<std::size_t, 4> table_dimensions(SeifertType type, CaseId case_id, int g, int n,
                                            std::uint32_t p);

ExpectedGroups expected_groups(const SeifertInvariants& inv, std::uint32_t p,
                               Variant variant = Variant::Theorem);

/**
 * Structure constants. entries[(x, y)] holds the coordinates of x ∪ y in
 * basis[deg x + deg y]; only degree pairs (1,1), (1,2) and (2,1) are kept.
 */
struct ProductTable {
    std::uint32_t p = 2;
    std::array<std::vector<std::string>, 4> basis;
    std::map<std::pair<std::string, std::string>, FpVector> entries;

    friend bool operator==(const ProductTable&, const ProductTable&) = default;
};

/// Table with every admissible pair present and set to zero.
ProductTable empty_product_table(const ExpectedGroups& groups);

ProductTable expected_ring(const SeifertInvariants& inv, std::uint32_t p,
                           Variant variant = Variant::Theorem);

/// Human-readable rendering of a coordinate vector ("2 beta + phi[1]").
std::string render_class(const FpVector& coords, const std::vector<std::string>& basis,
                         std::uint32_t p);

/// Keys of entries whose values differ between the two tables.
std::vector<std::pair<std::string, std::string>> table_differences(const ProductTable& x,
                                                                   const ProductTable& y);

}  // namespace seifert

#endif
