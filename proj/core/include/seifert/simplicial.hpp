/**
 * @file simplicial.hpp
 * @brief Delta-complex subdividing the cellular decomposition.
 *
 * Each d-simplex stores its faces s_0..s_d (s_i opposite vertex v_i) as
 * indices into dimension d-1. Vertices are never materialized beyond the
 * 0-simplices themselves; repeated faces are allowed.
 */
#ifndef SEIFERT_SIMPLICIAL_HPP
#define SEIFERT_SIMPLICIAL_HPP

#include <array>
#include <string>
#include <vector>

#include "seifert/complex.hpp"
#include "seifert/invariants.hpp"
#include "seifert/words.hpp"

namespace seifert {

struct DeltaComplex {
    SeifertInvariants inv;
    std::vector<PavementWord> words;  ///< one per fiber
    GradedLabels simplices;
    /// faces[d][i] lists the d+1 faces of simplex i of dimension d (d >= 1).
    std::array<std::vector<std::vector<std::size_t>>, 4> faces;
    /// boundary[d-1] maps C_d -> C_{d-1}.
    std::array<SparseIntMatrix, 3> boundary;

    std::size_t count(int d) const { return simplices.count(d); }
    std::size_t index(int d, const std::string& label) const { return simplices.index(d, label); }
    const std::string& label(int d, std::size_t i) const { return simplices.label(d, i); }
    const std::vector<std::size_t>& face_list(int d, std::size_t i) const {
        return faces[static_cast<std::size_t>(d)][i];
    }
    const SparseIntMatrix& d(int k) const { return boundary[static_cast<std::size_t>(k - 1)]; }

    /// Index of the vertex v_pos of a simplex.
    std::size_t vertex(int d, std::size_t i, int pos) const;
    /// Front face (v_0..v_k) and back face (v_{d-k}..v_d) of a d-simplex.
    std::size_t front_face(int d, std::size_t i, int k) const;
    std::size_t back_face(int d, std::size_t i, int k) const;

    SimplicialCochain hat(int d, const std::string& label, std::uint32_t p = 0) const;

    long euler_characteristic() const;
};

/// Throws InputError unless every fiber has a_k >= 1 and (b_k > 0 or a_k = 1).
void require_constructible(const SeifertInvariants& inv);

DeltaComplex build_delta_complex(const SeifertInvariants& inv);

const SparseIntMatrix& boundary_matrix(const DeltaComplex& cx, int d);

/// Violations of the simplicial identities d_i d_j = d_{j-1} d_i (i < j);
/// empty when every face assignment is consistent.
std::vector<std::string> face_identity_violations(const DeltaComplex& cx);

CohomologyBasis simplicial_cohomology(const DeltaComplex& cx, std::uint32_t p);

std::array<IntegralHomologyGroup, 4> simplicial_integral_homology(const DeltaComplex& cx);

/// Line-oriented dump: `SIMPLEX <dim> <label> FACES <l0> <l1> ...`.
std::string export_complex(const DeltaComplex& cx);

}  // namespace seifert

#endif
