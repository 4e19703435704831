/**
 * @file transfer.hpp
 * @brief The chain map T from cellular to simplicial chains, its transpose,
 *        the auxiliary cochains Y_k, Z_k, V_k, U_l and explicit cocycle lifts.
 */
#ifndef SEIFERT_TRANSFER_HPP
#define SEIFERT_TRANSFER_HPP

#include <array>
#include <string>
#include <vector>

#include "seifert/cellular.hpp"
#include "seifert/closedform.hpp"
#include "seifert/complex.hpp"
#include "seifert/simplicial.hpp"

namespace seifert {

/// T[d] maps cellular d-chains (columns) to simplicial d-chains (rows).
struct ChainMap {
    std::array<SparseIntMatrix, 4> T;

    const SparseIntMatrix& operator[](int d) const { return T[static_cast<std::size_t>(d)]; }
};

ChainMap build_T(const CellComplex& cell, const DeltaComplex& simp);

/// Cells c of dimension d (d = 1..3) with ∂T(c) != T(∂c); empty for a chain map.
std::vector<std::string> chain_map_defects(const CellComplex& cell, const DeltaComplex& simp,
                                           const ChainMap& t);

/// T^t over Z or F_p (modulus taken from the cochain).
CellCochain transpose_T(const ChainMap& t, const SimplicialCochain& x);
FpVector transpose_T(const ChainMap& t, int degree, const FpVector& x, std::uint32_t p);

/// True when T induces an isomorphism on F_p cohomology in every degree.
bool induces_isomorphism(const CellComplex& cell, const DeltaComplex& simp, const ChainMap& t,
                         std::uint32_t p);

/// Simplicial cochain with rational values, used while building lifts.
struct RationalCochain {
    int degree = 0;
    std::vector<Rational> values;

    RationalCochain() = default;
    RationalCochain(int deg, std::size_t size) : degree(deg), values(size, Rational(0)) {}

    RationalCochain& axpy(const Rational& s, const RationalCochain& o);
    RationalCochain& operator+=(const RationalCochain& o) { return axpy(Rational(1), o); }
    RationalCochain& operator-=(const RationalCochain& o) { return axpy(Rational(-1), o); }

    bool is_zero() const;
    /// Values reduced mod p; throws LinalgError if p divides a denominator.
    FpVector reduce(std::uint32_t p) const;
};

/// Coboundary over Q.
RationalCochain coboundary(const DeltaComplex& simp, const RationalCochain& x);

/**
 * Auxiliary cochains of one fiber (working index k) and the U_l family.
 * All are integral.
 */
struct AuxCochains {
    std::vector<RationalCochain> U;  ///< U_l, l = 0..L-1
    std::vector<RationalCochain> Y;  ///< per fiber
    std::vector<RationalCochain> Z;
    std::vector<RationalCochain> V;
};

AuxCochains build_aux(const DeltaComplex& simp);

/// Fibers k where ∂Z_k = U_{*+k} + a_k Y_k fails, and likewise for the
/// second identity; entries read "Z[k]" or "V[k]".
std::vector<std::string> aux_identity_defects(const DeltaComplex& simp, const AuxCochains& aux);

/**
 * Everything derived from one (invariants, p): the working fiber order,
 * both complexes built on it, T and the auxiliary cochains.
 */
struct Workbench {
    SeifertInvariants input;
    DerivedConstants derived;
    SeifertInvariants working;
    CellComplex cell;
    DeltaComplex simp;
    ChainMap T;
    AuxCochains aux;

    Workbench(const SeifertInvariants& inv, std::uint32_t p);
    std::uint32_t p() const { return derived.p; }
};

/// Lift building block over Q, e.g. the lift of t_j or of q_k - q_0.
RationalCochain lift_block(const Workbench& wb, LiftKind kind, int index);

/// Cellular cochain mod p of a generator's defining formula.
CellCochain cellular_representative(const Workbench& wb, const GeneratorSpec& spec);

struct CocycleLift {
    GeneratorSpec spec;
    CellCochain cellular;      ///< mod p
    SimplicialCochain simplicial;  ///< mod p
    bool from_solver = false;
};

/// Explicit lift of a generator; falls back to solving when the spec has
/// no formula. Does not verify; see lift_defects.
CocycleLift lift_generator(const Workbench& wb, const GeneratorSpec& spec);

/// Some simplicial cocycle x with T^t x = target mod p; throws LinalgError
/// if none exists.
SimplicialCochain solve_lift(const Workbench& wb, const CellCochain& target);

/// Empty when the lift is a cocycle and T^t of it equals the cellular
/// representative; otherwise short descriptions of what failed.
std::vector<std::string> lift_defects(const Workbench& wb, const CocycleLift& lift);

}  // namespace seifert

#endif
