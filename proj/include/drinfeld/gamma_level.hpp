/*
   Copyright 2026 The drinfeld-ut Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DRINFELD_GAMMA_LEVEL_HPP
#define DRINFELD_GAMMA_LEVEL_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hecke.hpp"
#include "spectral.hpp"

namespace drinfeld {

/// U_t on cusp forms for Gamma(t), in the basis {c_{j,0}} followed by {c_{j,r} : r != 0}.
/// Only the leading corner (the Gamma_1(t) matrix) is stored; all other rows and columns are zero.
struct GammaMatrix {
    WeightParams params;
    std::size_t full_dim = 0;
    std::size_t corner_dim = 0;
    std::vector<UtBlock> corner_blocks;
    std::size_t kernel_dim = 0;

    std::size_t complement_dim() const noexcept { return full_dim - corner_dim; }

    /// Basis element at position i as (j, r): r = 0 for the corner, otherwise r in 1..q-1 indexes a nonzero
    /// element of F_q. The tail is ordered by r, then j.
    std::pair<int, std::uint64_t> basis_element(std::size_t i) const {
        if (i >= full_dim) throw std::out_of_range("basis_element: index out of range");
        const int low = params.mode == CuspMode::single ? 0 : 1;
        if (i < corner_dim) return {low + static_cast<int>(i), 0};
        const std::size_t per_r = params.mode == CuspMode::single ? static_cast<std::size_t>(params.k - 1)
                                                                  : static_cast<std::size_t>(params.k - 2);
        const std::size_t t = i - corner_dim;
        return {static_cast<int>(t % per_r), t / per_r + 1};
    }

    /// Entry of the full matrix (row = target, column = source).
    TPoly entry(std::size_t row, std::size_t col) const {
        if (row >= full_dim || col >= full_dim) throw std::out_of_range("GammaMatrix entry out of range");
        const std::uint32_t p = params.p();
        if (row >= corner_dim || col >= corner_dim) return TPoly(p);
        const int low = params.mode == CuspMode::single ? 0 : 1;
        const int src = low + static_cast<int>(col), dst = low + static_cast<int>(row);
        for (const auto& b : corner_blocks) {
            if ((src - b.residue) % (params.q() - 1) != 0) continue;
            std::size_t ci = 0, ri = 0;
            while (b.indices[ci] != src) ++ci;
            while (ri < b.dim() && b.indices[ri] != dst) ++ri;
            return ri < b.dim() ? b.entries(ri, ci) : TPoly(p);
        }
        return TPoly(p);
    }

    PolyMatrix corner() const { return assemble(params, corner_blocks); }

    /// (corner characteristic polynomial) * X^(complement dimension).
    XPoly char_poly() const {
        const std::uint32_t p = params.p();
        XPoly acc = XPoly::x_power(complement_dim(), p);
        for (const auto& b : corner_blocks) acc *= drinfeld::char_poly(b);
        return acc;
    }
};

/// Dimension of the space of (double) cusp forms for Gamma(t): q(k-1), resp. q(k-2)-1 (0 for k = 2).
inline std::size_t gamma_dimension(const WeightParams& params) {
    const auto q = static_cast<std::size_t>(params.q());
    const auto k = static_cast<std::size_t>(params.k);
    if (params.mode == CuspMode::single) return q * (k - 1);
    return k == 2 ? 0 : q * (k - 2) - 1;
}

inline GammaMatrix build_gamma_matrix(const WeightParams& params) {
    GammaMatrix g;
    g.params = params;
    g.full_dim = gamma_dimension(params);
    g.corner_dim = static_cast<std::size_t>(params.dimension());
    g.corner_blocks = tag_gamma0_classes(params, build_ut_matrix(params));
    std::size_t rank = 0;
    for (const auto& b : g.corner_blocks) rank += b.entries.rank();
    g.kernel_dim = g.full_dim - rank;
    return g;
}

/// Checks that U_t on Gamma(t) is diagonalizable exactly when every Gamma_1(t) block is. The Gamma(t) side
/// is decided from the minimal polynomial of the whole matrix, the lcm of the block minimal polynomials and
/// of X for the zero complement.
inline bool gamma_equivalence_check(const WeightParams& params) {
    const GammaMatrix g = build_gamma_matrix(params);
    const std::uint32_t p = params.p();
    bool all_blocks = true;
    XPoly full_min = XPoly::constant(TPoly::constant(1, p));
    for (const auto& b : g.corner_blocks) {
        const Verdict v = diagonalizability_verdict(b);
        all_blocks = all_blocks && v.diagonalizable;
        full_min = lcm_over_fraction_field(full_min, v.min_poly);
    }
    if (g.complement_dim() > 0) full_min = lcm_over_fraction_field(full_min, XPoly::x_power(1, p));
    const bool whole = is_separable_squarefree(full_min);
    return whole == all_blocks;
}

}  // namespace drinfeld

#endif  // DRINFELD_GAMMA_LEVEL_HPP
