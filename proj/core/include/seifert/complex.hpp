/**
 * @file complex.hpp
 * @brief Pieces shared by the cellular and simplicial complexes: labelled
 *        cell tables, cochain vectors and F_p cohomology of a chain complex.
 */
#ifndef SEIFERT_COMPLEX_HPP
#define SEIFERT_COMPLEX_HPP

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "seifert/linalg.hpp"

namespace seifert {

/// Cells of dimensions 0..3 addressed by symbolic label.
class GradedLabels {
public:
    std::size_t add(int dim, const std::string& label);
    std::size_t index(int dim, const std::string& label) const;
    bool contains(int dim, const std::string& label) const;
    std::size_t count(int dim) const { return labels_[static_cast<std::size_t>(dim)].size(); }
    const std::string& label(int dim, std::size_t i) const {
        return labels_[static_cast<std::size_t>(dim)][i];
    }
    const std::vector<std::string>& labels(int dim) const {
        return labels_[static_cast<std::size_t>(dim)];
    }

private:
    std::array<std::vector<std::string>, 4> labels_;
    std::array<std::unordered_map<std::string, std::size_t>, 4> index_;
};

/// Label helpers: "t[1]", "rho1[0]", "mu[2,3]".
std::string lbl(const std::string& family, long i);
std::string lbl(const std::string& family, long i, long j);

struct CellTag {};
struct SimplexTag {};

/**
 * Cochain over Z (modulus 0) or Z_p, indexed like the cells of one degree.
 * Values over Z_p are kept in [0, p).
 */
template <class Tag>
struct Cochain {
    int degree = 0;
    std::uint32_t modulus = 0;
    std::vector<std::int64_t> values;

    Cochain() = default;
    Cochain(int deg, std::size_t size, std::uint32_t p = 0) : degree(deg), modulus(p), values(size, 0) {}

    std::size_t size() const { return values.size(); }

    void add(std::size_t i, std::int64_t coeff) {
        values[i] += coeff;
        normalize_entry(i);
    }

    Cochain reduced(std::uint32_t p) const {
        Cochain out(degree, values.size(), p);
        for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = mod_p(values[i], p);
        return out;
    }

    FpVector fp(std::uint32_t p) const {
        FpVector out(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) out[i] = mod_p(values[i], p);
        return out;
    }

    static Cochain from_fp(int deg, const FpVector& v, std::uint32_t p) {
        Cochain out(deg, v.size(), p);
        for (std::size_t i = 0; i < v.size(); ++i) out.values[i] = v[i] % p;
        return out;
    }

    bool is_zero() const {
        for (auto v : values) {
            if (v != 0) return false;
        }
        return true;
    }

    Cochain& operator+=(const Cochain& o) { return axpy(1, o); }
    Cochain& operator-=(const Cochain& o) { return axpy(-1, o); }

    /// this += s * o
    Cochain& axpy(std::int64_t s, const Cochain& o) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            values[i] += s * o.values[i];
            normalize_entry(i);
        }
        return *this;
    }

    friend bool operator==(const Cochain&, const Cochain&) = default;

private:
    void normalize_entry(std::size_t i) {
        if (modulus != 0) values[i] = mod_p(values[i], modulus);
    }
};

using CellCochain = Cochain<CellTag>;
using SimplicialCochain = Cochain<SimplexTag>;

/**
 * F_p cohomology of a cochain complex given by boundary maps
 * d_k : C_k -> C_{k-1} (k = 1..3).
 */
struct CohomologyBasis {
    std::uint32_t p = 2;
    std::array<std::size_t, 4> dims{};
    /// Cocycle representatives of a basis, per degree.
    std::array<std::vector<FpVector>, 4> representatives;
    /// A spanning set of the coboundaries, per degree.
    std::array<std::vector<FpVector>, 4> coboundaries;
};

CohomologyBasis cohomology_from_boundaries(const std::array<std::size_t, 4>& counts,
                                           const std::array<const SparseIntMatrix*, 3>& boundary,
                                           std::uint32_t p);

/// Integral homology H_0..H_3 as (free rank, torsion coefficients > 1).
struct IntegralHomologyGroup {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
    friend bool operator==(const IntegralHomologyGroup&, const IntegralHomologyGroup&) = default;
};

std::array<IntegralHomologyGroup, 4> integral_homology(const std::array<std::size_t, 4>& counts,
                                                       const std::array<const SparseIntMatrix*, 3>& boundary);

/// Coboundary ∂^t: degree-d cochain to degree d+1, using ∂_{d+1}.
FpVector coboundary_fp(const SparseIntMatrix& boundary_next, const FpVector& x, std::uint32_t p);

}  // namespace seifert

#endif
