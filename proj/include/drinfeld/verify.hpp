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

#ifndef DRINFELD_VERIFY_HPP
#define DRINFELD_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gamma_level.hpp"
#include "hecke.hpp"
#include "spectral.hpp"

namespace drinfeld {

/// Concrete failing instance of a theorem check.
struct Counterexample {
    std::uint64_t q = 0;
    int k = 0;
    int j = 0;
    std::string verdict;
};

struct TheoremCheckResult {
    std::string theorem;     // T3.1, T3.2, T4.3, T4.5, S4.2 or T5.1
    std::string parameters;  // e.g. "q=2,3,4 k<=q+2"
    bool passed = true;
    std::optional<Counterexample> counterexample;
    std::size_t cases = 0;  // number of blocks or weights examined
};

inline const std::vector<std::string>& known_theorems() {
    static const std::vector<std::string> ids{"T3.1", "T3.2", "T4.3", "T4.5", "S4.2", "T5.1"};
    return ids;
}

namespace detail {

inline std::string q_list_text(const std::vector<std::uint64_t>& qs) {
    std::string s;
    for (auto q : qs) s += (s.empty() ? "" : ",") + std::to_string(q);
    return s;
}

inline void fail(TheoremCheckResult& res, std::uint64_t q, int k, int j, std::string what) {
    if (!res.passed) return;
    res.passed = false;
    res.counterexample = Counterexample{q, k, j, std::move(what)};
}

inline bool is_antidiagonal_nonzero(const PolyMatrix& m) {
    return m.rows() == 2 && m(0, 0).is_zero() && m(1, 1).is_zero() && !m(0, 1).is_zero() && !m(1, 0).is_zero();
}

// Upper end of the weights for which some class can have exactly two elements with k > q+3.
inline int last_dim2_weight(std::uint64_t q) { return static_cast<int>(3 * q - 3); }

inline constexpr int open_bound = 1 << 20;

inline std::string top_text(int k_bound) { return k_bound >= open_bound ? "3q-3" : "min(3q-3," + std::to_string(k_bound) + ")"; }

}  // namespace detail

/// Every block is diagonalizable for 2 <= k <= q+2.
inline TheoremCheckResult check_small_weights(const std::vector<std::uint64_t>& qs) {
    TheoremCheckResult res{"T3.1", "q=" + detail::q_list_text(qs) + " 2<=k<=q+2", true, std::nullopt, 0};
    for (auto q : qs)
        for (int k = 2; k <= static_cast<int>(q) + 2; ++k)
            for (const auto& b : build_ut_matrix(WeightParams::from_q(q, k))) {
                ++res.cases;
                auto v = diagonalizability_verdict(b);
                if (!v.diagonalizable) detail::fail(res, q, k, b.residue, v.describe());
            }
    return res;
}

/// At k = q+3 the operator is diagonalizable iff q is odd; for even q the obstruction sits in the
/// antidiagonal class (residue 1 for q >= 4, the single 4x4 class for q = 2) with a nonconstant witness.
inline TheoremCheckResult check_weight_q_plus_3(const std::vector<std::uint64_t>& qs) {
    TheoremCheckResult res{"T3.2", "q=" + detail::q_list_text(qs) + " k=q+3", true, std::nullopt, 0};
    for (auto q : qs) {
        const int k = static_cast<int>(q) + 3;
        const bool odd = q % 2 == 1;
        bool global = true;
        for (const auto& b : build_ut_matrix(WeightParams::from_q(q, k))) {
            ++res.cases;
            auto v = diagonalizability_verdict(b);
            global = global && v.diagonalizable;
            const bool expected_bad = !odd && (q == 2 ? b.residue == 0 : b.residue == 1);
            if (v.diagonalizable == expected_bad) detail::fail(res, q, k, b.residue, v.describe());
            if (expected_bad) {
                if (v.witness_gcd.degree() < 1) detail::fail(res, q, k, b.residue, "witness gcd is constant");
                if (q >= 4 && !detail::is_antidiagonal_nonzero(b.entries)) detail::fail(res, q, k, b.residue, "failing block is not antidiagonal");
                if (q == 2 && b.dim() != 4) detail::fail(res, q, k, b.residue, "failing block is not 4x4");
            }
        }
        if (global != odd) detail::fail(res, q, k, -1, global ? "diagonalizable for even q" : "not diagonalizable for odd q");
    }
    return res;
}

/// Two-element classes for k > q+3: verdict agrees with "alpha != 0, or q odd and det != 0, or M = 0", the
/// closed form agrees with the generic builder, and in odd characteristic every such block is diagonalizable.
inline TheoremCheckResult check_dim2_blocks(const std::vector<std::uint64_t>& qs, int k_bound) {
    TheoremCheckResult res{"T4.3", "q=" + detail::q_list_text(qs) + " q+3<k<=" + detail::top_text(k_bound), true, std::nullopt, 0};
    for (auto q : qs) {
        if (q % 2 == 0) continue;
        const int top = std::min(detail::last_dim2_weight(q), k_bound);
        for (int k = static_cast<int>(q) + 4; k <= top; ++k) {
            const auto params = WeightParams::from_q(q, k);
            for (const auto& b : build_ut_matrix(params)) {
                if (b.dim() != 2) continue;
                ++res.cases;
                auto [coef, closed] = dim2_closed_form(params, b.residue);
                if (!(closed.entries == b.entries)) detail::fail(res, q, k, b.residue, "closed form differs from builder");
                auto v = diagonalizability_verdict(b);
                const bool criterion = !coef.alpha.is_zero() || !(coef.beta * coef.gamma).is_zero() || b.entries.is_zero();
                if (v.diagonalizable != criterion) detail::fail(res, q, k, b.residue, "verdict disagrees with 2x2 criterion: " + v.describe());
                if (!v.diagonalizable) detail::fail(res, q, k, b.residue, v.describe());
            }
        }
    }
    return res;
}

/// Even characteristic, two-element classes: not diagonalizable exactly when antidiagonal with nonzero
/// entries (alpha = 0, beta*gamma != 0), and never for even k.
inline TheoremCheckResult check_even_characteristic(const std::vector<std::uint64_t>& qs, int k_bound) {
    TheoremCheckResult res{"S4.2", "q=" + detail::q_list_text(qs) + " even, 2<=k<=" + detail::top_text(k_bound), true, std::nullopt, 0};
    for (auto q : qs) {
        if (q % 2 == 1) continue;
        const int top = std::min(std::max(detail::last_dim2_weight(q), 3), k_bound);
        for (int k = 2; k <= top; ++k) {
            const auto params = WeightParams::from_q(q, k);
            for (const auto& b : build_ut_matrix(params)) {
                if (b.dim() != 2) continue;
                ++res.cases;
                auto v = diagonalizability_verdict(b);
                const bool anti = detail::is_antidiagonal_nonzero(b.entries);
                if (b.indices[0] == b.residue && b.indices[1] == b.residue + static_cast<int>(q) - 1) {
                    auto [coef, closed] = dim2_closed_form(params, b.residue);
                    const bool anti_coef = coef.alpha.is_zero() && !(coef.beta * coef.gamma).is_zero();
                    if (anti_coef != anti) detail::fail(res, q, k, b.residue, "antidiagonal shape disagrees with alpha, beta, gamma");
                }
                if (v.diagonalizable == anti) detail::fail(res, q, k, b.residue, v.describe());
                if (k % 2 == 0 && !v.diagonalizable) detail::fail(res, q, k, b.residue, "non-diagonalizable block at even weight");
            }
        }
    }
    return res;
}

/// k = 2q: every block diagonalizable and the class of c_0 has eigenpairs
/// (t^q, c_{q-1}), (t, c_0 + (1 + t^(q-1)) c_{q-1} + c_{2q-2}), (0, t^(q-1) c_{q-1} + c_{2q-2}).
inline TheoremCheckResult check_weight_2q(const std::vector<std::uint64_t>& qs) {
    TheoremCheckResult res{"T4.5", "q=" + detail::q_list_text(qs) + " k=2q", true, std::nullopt, 0};
    for (auto q : qs) {
        const int k = static_cast<int>(2 * q);
        const auto params = WeightParams::from_q(q, k);
        const std::uint32_t p = params.p();
        for (const auto& b : build_ut_matrix(params)) {
            ++res.cases;
            auto v = diagonalizability_verdict(b);
            if (!v.diagonalizable) detail::fail(res, q, k, b.residue, v.describe());
            if (b.residue != 0) continue;
            const TPoly one = TPoly::constant(1, p), zero(p);
            const TPoly tq1 = TPoly::monomial(1, q - 1, p);
            std::vector<EigenPair> pairs{{TPoly::monomial(1, q, p), {zero, one, zero}},
                                         {TPoly::monomial(1, 1, p), {one, one + tq1, one}},
                                         {zero, {zero, tq1, one}}};
            if (b.dim() != 3 || !verify_eigenpairs(b, pairs)) detail::fail(res, q, k, 0, "listed eigenpairs do not verify");
        }
    }
    return res;
}

/// Gamma(t) versus Gamma_1(t): equivalence of verdicts, characteristic polynomial of the full matrix and the
/// dimension formulas, for both cusp modes and 2 <= k <= k_bound (default 2q+2 when k_bound <= 0).
inline TheoremCheckResult check_gamma_level(const std::vector<std::uint64_t>& qs, int k_bound) {
    TheoremCheckResult res{"T5.1", "q=" + detail::q_list_text(qs) + " 2<=k<=" + (k_bound > 0 ? std::to_string(k_bound) : "2q+2") + " single,double",
                           true, std::nullopt, 0};
    for (auto q : qs) {
        const int top = k_bound > 0 ? k_bound : static_cast<int>(2 * q + 2);
        for (int k = 2; k <= top; ++k)
            for (CuspMode mode : {CuspMode::single, CuspMode::double_}) {
                ++res.cases;
                const auto params = WeightParams::from_q(q, k, mode);
                if (!gamma_equivalence_check(params)) detail::fail(res, q, k, -1, "Gamma(t) and Gamma_1(t) verdicts differ");
                const GammaMatrix g = build_gamma_matrix(params);
                const std::size_t expect_dim =
                    mode == CuspMode::single ? q * static_cast<std::size_t>(k - 1) : (k == 2 ? 0 : q * static_cast<std::size_t>(k - 2) - 1);
                if (g.full_dim != expect_dim) detail::fail(res, q, k, -1, "dimension formula");
                if (g.kernel_dim < g.full_dim - g.corner_dim) detail::fail(res, q, k, -1, "kernel smaller than the complement");
                const XPoly corner_chi = char_poly(g.corner());
                const XPoly expect = corner_chi * XPoly::x_power(g.full_dim - g.corner_dim, params.p());
                if (!(g.char_poly() == expect)) detail::fail(res, q, k, -1, "char poly is not corner * X^(complement)");
            }
    }
    return res;
}

/// Runs the named checks. k_bound <= 0 selects each check's natural range.
inline std::vector<TheoremCheckResult> run_verification(const std::vector<std::string>& theorems, const std::vector<std::uint64_t>& qs,
                                                        int k_bound) {
    const int bound = k_bound > 0 ? k_bound : detail::open_bound;
    std::vector<TheoremCheckResult> out;
    for (const auto& id : theorems) {
        if (id == "T3.1")
            out.push_back(check_small_weights(qs));
        else if (id == "T3.2")
            out.push_back(check_weight_q_plus_3(qs));
        else if (id == "T4.3")
            out.push_back(check_dim2_blocks(qs, bound));
        else if (id == "T4.5")
            out.push_back(check_weight_2q(qs));
        else if (id == "S4.2")
            out.push_back(check_even_characteristic(qs, bound));
        else if (id == "T5.1")
            out.push_back(check_gamma_level(qs, k_bound));
        else
            throw std::invalid_argument("unknown theorem id '" + id + "'");
    }
    return out;
}

inline std::string describe(const TheoremCheckResult& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS " : "FAIL ") << r.theorem << " [" << r.parameters << "] cases=" << r.cases;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        os << " counterexample: q=" << c.q << " k=" << c.k << " j=" << c.j << " (" << c.verdict << ")";
    }
    return os.str();
}

}  // namespace drinfeld

#endif  // DRINFELD_VERIFY_HPP
