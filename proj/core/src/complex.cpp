/**
 * @file complex.cpp
 * @brief Labelled cells and F_p cohomology of small chain complexes.
 */
#include "seifert/complex.hpp"

#include <stdexcept>

namespace seifert {

std::size_t GradedLabels::add(int dim, const std::string& label) {
    auto d = static_cast<std::size_t>(dim);
    auto [it, inserted] = index_[d].emplace(label, labels_[d].size());
    if (!inserted) throw std::logic_error("duplicate cell label " + label);
    labels_[d].push_back(label);
    return it->second;
}

std::size_t GradedLabels::index(int dim, const std::string& label) const {
    const auto& m = index_[static_cast<std::size_t>(dim)];
    auto it = m.find(label);
    if (it == m.end()) {
        throw std::out_of_range("no cell '" + label + "' in dimension " + std::to_string(dim));
    }
    return it->second;
}

bool GradedLabels::contains(int dim, const std::string& label) const {
    return index_[static_cast<std::size_t>(dim)].count(label) != 0;
}

std::string lbl(const std::string& family, long i) {
    return family + "[" + std::to_string(i) + "]";
}

std::string lbl(const std::string& family, long i, long j) {
    return family + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

FpVector coboundary_fp(const SparseIntMatrix& boundary_next, const FpVector& x, std::uint32_t p) {
    return boundary_next.apply_transpose(x, p);
}

CohomologyBasis cohomology_from_boundaries(const std::array<std::size_t, 4>& counts,
                                           const std::array<const SparseIntMatrix*, 3>& boundary,
                                           std::uint32_t p) {
    CohomologyBasis out;
    out.p = p;
    for (int d = 0; d <= 3; ++d) {
        const auto du = static_cast<std::size_t>(d);
        const std::size_t n = counts[du];
        // Coboundaries in degree d: image of ∂_d^t applied to the basis of C^{d-1}.
        std::vector<FpVector> image;
        if (d >= 1) {
            const PrimeFieldMatrix delta = boundary[du - 1]->transpose_to_fp(p);  // n x counts[d-1]
            const RrefResult r = rref(delta.transpose());
            for (std::size_t i = 0; i < r.rank; ++i) {
                FpVector row(n);
                for (std::size_t c = 0; c < n; ++c) row[c] = r.reduced(i, c);
                image.push_back(std::move(row));
            }
        }
        // Cocycles: kernel of ∂_{d+1}^t.
        std::vector<FpVector> kernel;
        if (d <= 2) {
            kernel = kernel_basis(boundary[du]->transpose_to_fp(p));
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                FpVector e(n, 0);
                e[i] = 1;
                kernel.push_back(std::move(e));
            }
        }
        QuotientBasis q(n, p);
        for (const auto& b : image) q.add_relation(b);
        for (const auto& z : kernel) {
            if (q.add_generator(z)) out.representatives[du].push_back(z);
        }
        out.dims[du] = out.representatives[du].size();
        out.coboundaries[du] = std::move(image);
    }
    return out;
}

std::array<IntegralHomologyGroup, 4> integral_homology(
    const std::array<std::size_t, 4>& counts,
    const std::array<const SparseIntMatrix*, 3>& boundary) {
    std::array<std::size_t, 4> ranks{};  // rank of d_k for k = 1..3 at index k
    std::array<std::vector<BigInt>, 4> factors;
    for (int k = 1; k <= 3; ++k) {
        const SmithForm s = smith_normal_form(IntegerMatrix::from_sparse(*boundary[static_cast<std::size_t>(k - 1)]));
        ranks[static_cast<std::size_t>(k)] = s.diagonal.size();
        factors[static_cast<std::size_t>(k)] = s.diagonal;
    }
    std::array<IntegralHomologyGroup, 4> out;
    for (int i = 0; i <= 3; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        const std::size_t rank_out = i >= 1 ? ranks[iu] : 0;
        const std::size_t rank_in = i <= 2 ? ranks[iu + 1] : 0;
        out[iu].rank = counts[iu] - rank_out - rank_in;
        if (i <= 2) {
            for (const BigInt& f : factors[iu + 1]) {
                if (f > 1) out[iu].torsion.push_back(f);
            }
        }
    }
    return out;
}

}  // namespace seifert
