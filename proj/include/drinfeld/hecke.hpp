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

#ifndef DRINFELD_HECKE_HPP
#define DRINFELD_HECKE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "poly_matrix.hpp"
#include "tpoly.hpp"

namespace drinfeld {

/// Cusp forms (single) or double cusp forms (double).
enum class CuspMode { single, double_ };

inline std::string_view to_string(CuspMode m) noexcept { return m == CuspMode::single ? "single" : "double"; }
inline CuspMode parse_cusp_mode(std::string_view s) {
    if (s == "single") return CuspMode::single;
    if (s == "double") return CuspMode::double_;
    throw std::invalid_argument("unknown cusp mode '" + std::string(s) + "'");
}

/// Weight k and cusp mode over F_q.
struct WeightParams {
    FieldParams field;
    int k = 2;
    CuspMode mode = CuspMode::single;

    WeightParams() = default;
    WeightParams(FieldParams f, int weight, CuspMode m = CuspMode::single) : field(f), k(weight), mode(m) {
        if (k < 2) throw std::invalid_argument("weight k must be at least 2, got " + std::to_string(k));
    }
    static WeightParams from_q(std::uint64_t q, int k, CuspMode m = CuspMode::single) { return {FieldParams::from_q(q), k, m}; }

    std::uint32_t p() const noexcept { return field.p; }
    std::int64_t q() const noexcept { return static_cast<std::int64_t>(field.q); }

    /// Inclusive range of basis indices: [0, k-2] for cusp forms, [1, k-3] for double cusp forms.
    /// Empty (nullopt) when the space is zero-dimensional.
    std::optional<std::pair<int, int>> index_range() const {
        if (mode == CuspMode::single) return std::pair{0, k - 2};
        if (k <= 3) return std::nullopt;
        return std::pair{1, k - 3};
    }
    /// Dimension of the space of (double) cusp forms for Gamma_1(t).
    int dimension() const noexcept {
        if (mode == CuspMode::single) return k - 1;
        return k > 2 ? k - 3 : 0;
    }

    friend bool operator==(const WeightParams&, const WeightParams&) = default;
};

/// Matrix of U_t restricted to one residue class of basis indices modulo q-1.
/// Column b holds the image of the basis vector indices[b].
struct UtBlock {
    int residue = 0;
    std::vector<int> indices;
    PolyMatrix entries;
    bool gamma0_tagged = false;

    std::size_t dim() const noexcept { return indices.size(); }
};

/// Coefficients of a two-dimensional block {c_j, c_{j+q-1}}.
struct Dim2Coefficients {
    FpElem alpha;
    FpElem beta;
    FpElem gamma;
    int j = 0;
};

/// Basis indices congruent to j mod q-1 in the index range of params, ascending.
inline std::vector<int> class_indices(const WeightParams& params, int j) {
    std::vector<int> out;
    auto range = params.index_range();
    if (!range) return out;
    const std::int64_t step = params.q() - 1;
    for (std::int64_t l = j; l <= range->second; l += step)
        if (l >= range->first) out.push_back(static_cast<int>(l));
    return out;
}

/// Coefficient of c_dst in U_t(c_src) on the cusp-form basis:
///   dst == src:            -(-t)^(src+1) C(k-2-src, src)
///   dst = src + h(q-1):    -t^(src+1) [C(k-2-dst, -h(q-1)) + (-1)^(src+1) C(k-2-dst, src)]
/// and 0 when dst - src is not a multiple of q-1.
inline TPoly ut_entry(const WeightParams& params, int src, int dst) {
    const std::uint32_t p = params.p();
    const std::int64_t step = params.q() - 1;
    const int k = params.k;
    if (src < 0 || dst < 0 || src > k - 2 || dst > k - 2) throw std::out_of_range("ut_entry: basis index out of range");
    const std::int64_t diff = dst - src;
    if (diff % step != 0) return TPoly(p);
    const auto e = static_cast<std::size_t>(src + 1);
    if (diff == 0) return TPoly::monomial(sign_pow(src, p) * binom_mod_p(k - 2 - src, src, p), e);
    FpElem c = binom_mod_p(k - 2 - dst, -diff, p) + sign_pow(src + 1, p) * binom_mod_p(k - 2 - dst, src, p);
    return TPoly::monomial(-c, e);
}

/// All nonempty residue-class blocks of U_t, ordered by residue. Blocks are untagged.
inline std::vector<UtBlock> build_ut_matrix(const WeightParams& params) {
    if (params.k < 2) throw std::invalid_argument("weight k must be at least 2");
    std::vector<UtBlock> blocks;
    auto range = params.index_range();
    if (!range) return blocks;
    const std::int64_t last_residue = std::min<std::int64_t>(params.q() - 2, range->second);
    for (int j = 0; j <= last_residue; ++j) {
        UtBlock b;
        b.residue = j;
        b.indices = class_indices(params, j);
        if (b.indices.empty()) continue;
        const std::size_t n = b.indices.size();
        b.entries = PolyMatrix::square(n, params.p());
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row) b.entries(row, col) = ut_entry(params, b.indices[col], b.indices[row]);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

/// The full (dimension x dimension) matrix in index order, assembled from the blocks.
inline PolyMatrix assemble(const WeightParams& params, const std::vector<UtBlock>& blocks) {
    const auto n = static_cast<std::size_t>(params.dimension());
    const int low = params.index_range() ? params.index_range()->first : 0;
    PolyMatrix m = PolyMatrix::square(n, params.p());
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                m(static_cast<std::size_t>(b.indices[i] - low), static_cast<std::size_t>(b.indices[j] - low)) = b.entries(i, j);
    return m;
}

/// Closed form of a two-element class {c_j, c_{j+q-1}}:
///   [[(-1)^j alpha t^(j+1), -gamma t^(j+q)], [(-1)^j beta t^(j+1), 0]].
inline std::pair<Dim2Coefficients, UtBlock> dim2_closed_form(const WeightParams& params, int j) {
    const std::int64_t q = params.q();
    const int k = params.k;
    const std::uint32_t p = params.p();
    if (j < 0 || j > q - 2) throw std::invalid_argument("dim2_closed_form: residue out of range");
    auto idx = class_indices(params, j);
    if (idx.size() != 2 || idx[0] != j)
        throw std::invalid_argument("dim2_closed_form: class of residue " + std::to_string(j) + " does not have the form {j, j+q-1}");
    Dim2Coefficients c{binom_mod_p(k - 2 - j, j, p), binom_mod_p(k - 1 - j - q, j, p),
                       binom_mod_p(k - 2 - j, q - 1, p) + sign_pow(j + 1, p) * binom_mod_p(k - 2 - j, j + q - 1, p), j};
    UtBlock b;
    b.residue = j;
    b.indices = std::move(idx);
    b.entries = PolyMatrix::square(2, p);
    const auto low = static_cast<std::size_t>(j + 1);
    b.entries(0, 0) = TPoly::monomial(sign_pow(j, p) * c.alpha, low);
    b.entries(0, 1) = TPoly::monomial(-c.gamma, static_cast<std::size_t>(j + q));
    b.entries(1, 0) = TPoly::monomial(sign_pow(j, p) * c.beta, low);
    return {c, std::move(b)};
}

/// Basis indices whose classes carry the Gamma_0(t)-invariant cusp forms: (k-1-q)/2 and (k-2)/2 when integral
/// and inside the index range.
inline std::vector<int> gamma0_indices(const WeightParams& params) {
    std::vector<int> out;
    auto range = params.index_range();
    if (!range) return out;
    const std::int64_t a = params.k - 1 - params.q();
    for (std::int64_t twice : {a, std::int64_t{params.k - 2}})
        if (twice >= 0 && twice % 2 == 0 && twice / 2 >= range->first && twice / 2 <= range->second) out.push_back(static_cast<int>(twice / 2));
    return out;
}

inline std::vector<UtBlock> tag_gamma0_classes(const WeightParams& params, std::vector<UtBlock> blocks) {
    const auto marked = gamma0_indices(params);
    for (auto& b : blocks) {
        b.gamma0_tagged = false;
        for (int i : marked)
            if (std::find(b.indices.begin(), b.indices.end(), i) != b.indices.end()) b.gamma0_tagged = true;
    }
    return blocks;
}

}  // namespace drinfeld

#endif  // DRINFELD_HECKE_HPP
