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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "test_util.hpp"

using namespace drinfeld;
using drinfeld::testing::power_sum;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

Outcome from_check(const TheoremCheckResult& r) { return {r.passed, describe(r)}; }

template <class F>
void for_each_scanned_block(F&& f) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
        for (int k = 2; k <= 3 * static_cast<int>(q); ++k)
            for (CuspMode mode : {CuspMode::single, CuspMode::double_}) {
                const auto params = WeightParams::from_q(q, k, mode);
                for (const auto& b : build_ut_matrix(params)) f(params, b);
            }
}

std::string where(const WeightParams& params, const UtBlock& b) {
    return "q=" + std::to_string(params.q()) + " k=" + std::to_string(params.k) + " mode=" + std::string(to_string(params.mode)) +
           " j=" + std::to_string(b.residue);
}

const std::vector<std::uint64_t> kAllQ{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25};

Outcome small_weights() { return from_check(check_small_weights(kAllQ)); }

Outcome weight_q_plus_3() { return from_check(check_weight_q_plus_3(kAllQ)); }

Outcome fixture_regression() {
    Outcome out;
    std::map<std::string, bool> required{{"q25_k33.txt", false}, {"q25_k40.txt", false}, {"q16_k29.txt", false}, {"q16_k30.txt", false}, {"q2_k5.txt", false}};
    std::size_t checks = 0;
    for (const auto& f : load_fixture_dir(DRINFELD_FIXTURE_DIR)) {
        const auto res = check_fixture(f);
        checks += res.checks;
        if (!res.passed) {
            out.passed = false;
            out.detail += res.diff;
        }
        if (required.count(f.name)) required[f.name] = res.passed;
    }
    for (const auto& [name, ok] : required)
        if (!ok) {
            out.passed = false;
            out.detail += " missing or failing " + name;
        }
    const auto blocks = build_ut_matrix(WeightParams::from_q(2, 5));
    const XPoly chi = char_poly(blocks.at(0));
    const XPoly factored = XPoly::parse("X", 2) * XPoly::parse("X + t", 2) * XPoly::parse("X^2 + t^5", 2);
    if (chi.to_string() != "X^4 + t*X^3 + t^5*X^2 + t^6*X" || chi != factored) {
        out.passed = false;
        out.detail += " q=2 k=5 char_poly " + chi.to_string();
    }
    if (out.passed) out.detail = std::to_string(checks) + " fixture checks, q=2 k=5 char_poly = X(X+t)(X^2+t^5)";
    return out;
}

Outcome dim2_odd() { return from_check(check_dim2_blocks({3, 5, 7, 9, 25}, detail::open_bound)); }

Outcome even_catalogue() { return from_check(check_even_characteristic({2, 4, 8, 16}, detail::open_bound)); }

Outcome weight_2q() { return from_check(check_weight_2q({3, 4, 5, 7, 8, 9})); }

Outcome gamma_level() { return from_check(check_gamma_level({2, 3, 4, 5}, 0)); }

Outcome oracle_equivalence() {
    Outcome out;
    std::size_t n = 0;
    for_each_scanned_block([&](const WeightParams& params, const UtBlock& b) {
        if (b.dim() > 8 || !out.passed) return;
        ++n;
        if (char_poly(b) != char_poly_oracle(b)) out = {false, "mismatch at " + where(params, b)};
    });
    if (out.passed) out.detail = std::to_string(n) + " blocks agree";
    return out;
}

Outcome property_suite() {
    Outcome out;
    std::size_t blocks = 0;
    std::mt19937_64 rng(2026);
    for_each_scanned_block([&](const WeightParams& params, const UtBlock& b) {
        if (!out.passed) return;
        ++blocks;
        const XPoly chi = char_poly(b);
        const XPoly mu = min_poly(b);
        if (!power_sum(chi, b.entries).is_zero()) out = {false, "Cayley-Hamilton fails at " + where(params, b)};
        else if (!power_sum(mu, b.entries).is_zero()) out = {false, "min_poly does not annihilate at " + where(params, b)};
        else if (!XPoly::divides(mu, chi)) out = {false, "min_poly does not divide char_poly at " + where(params, b)};
        if (!out.passed || b.dim() < 2) return;
        std::vector<std::size_t> perm(b.dim());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        if (diagonalizability_verdict(b.entries.permuted(perm)).diagonalizable != diagonalizability_verdict(b).diagonalizable)
            out = {false, "verdict changes under permutation at " + where(params, b)};
    });
    if (!out.passed) return out;
    std::size_t binomials = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        std::vector<std::uint32_t> row{1};
        for (std::int64_t n = 0; n <= 3000; ++n) {
            for (std::int64_t m = 0; m <= n; ++m) {
                ++binomials;
                if (binom_mod_p(n, m, p).value() != row[static_cast<std::size_t>(m)])
                    return {false, "binomial C(" + std::to_string(n) + "," + std::to_string(m) + ") mod " + std::to_string(p)};
            }
            std::vector<std::uint32_t> next(row.size() + 1, 0);
            for (std::size_t i = 0; i < next.size(); ++i)
                next[i] = ((i < row.size() ? row[i] : 0) + (i ? row[i - 1] : 0)) % p;
            row = std::move(next);
        }
    }
    out.detail = std::to_string(blocks) + " blocks, " + std::to_string(binomials) + " binomials";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"every block diagonalizable for 2 <= k <= q+2", small_weights},
        {"k = q+3 diagonalizable iff q odd, antidiagonal obstruction for even q", weight_q_plus_3},
        {"fixture matrices reproduced bit-exact", fixture_regression},
        {"two-element classes in odd characteristic: closed form, criterion, diagonalizable", dim2_odd},
        {"even characteristic: non-diagonalizable iff antidiagonal, never at even k", even_catalogue},
        {"k = 2q diagonalizable with the listed eigenpairs", weight_2q},
        {"Gamma(t) level: equivalence, char poly and dimension formulas", gamma_level},
        {"division-free char_poly equals cofactor expansion", oracle_equivalence},
        {"Cayley-Hamilton, min_poly, binomials, permutation invariance", property_suite},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s [%zu] %s (%.2fs) %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs, o.detail.c_str());
        if (!o.passed) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}
