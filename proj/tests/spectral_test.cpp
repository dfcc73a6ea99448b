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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "test_util.hpp"

using namespace drinfeld;
using drinfeld::testing::power_sum;

namespace {

const std::vector<std::uint64_t> kQs{2, 3, 4, 5, 7, 8, 9};

PolyMatrix M(std::string_view s, std::uint32_t p) { return PolyMatrix::parse(s, p); }
XPoly X(std::string_view s, std::uint32_t p) { return XPoly::parse(s, p); }

UtBlock block_of(const WeightParams& params, int residue) {
    for (auto& b : build_ut_matrix(params))
        if (b.residue == residue) return b;
    throw std::out_of_range("no block with that residue");
}

template <class F>
void for_each_block(int k_factor, F&& f) {
    for (auto q : kQs)
        for (int k = 2; k <= k_factor * static_cast<int>(q); ++k)
            for (CuspMode mode : {CuspMode::single, CuspMode::double_}) {
                const auto params = WeightParams::from_q(q, k, mode);
                for (const auto& b : build_ut_matrix(params)) f(params, b);
            }
}

}  // namespace

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(block_of(WeightParams::from_q(2, 5), 0)).to_string(), "X^4 + t*X^3 + t^5*X^2 + t^6*X");
    for (std::uint64_t q : {4, 5, 7, 8, 9, 16, 25}) {
        const auto params = WeightParams::from_q(q, static_cast<int>(q) + 3);
        const XPoly expect = XPoly::x_power(2, params.p()) - XPoly::constant(TPoly::monomial(1, q + 3, params.p()));
        EXPECT_EQ(char_poly(block_of(params, 1)), expect) << q;
    }
    EXPECT_EQ(char_poly(PolyMatrix::square(2, 3)).to_string(), "X^2");
    EXPECT_EQ(char_poly(PolyMatrix::square(0, 3)).to_string(), "1");
}

TEST(CharPoly, MonicOfBlockDimension) {
    for_each_block(3, [](const WeightParams&, const UtBlock& b) {
        XPoly f = char_poly(b);
        ASSERT_EQ(f.degree(), static_cast<int>(b.dim()));
        ASSERT_TRUE(f.is_monic());
    });
}

TEST(CharPolyOracle, Examples) {
    EXPECT_EQ(char_poly_oracle(PolyMatrix::square(2, 5)).to_string(), "X^2");
    const PolyMatrix d = M("[[t^2, 0], [0, 3*t]]", 5);
    EXPECT_EQ(char_poly_oracle(d), XPoly::linear(TPoly::parse("t^2", 5)) * XPoly::linear(TPoly::parse("3*t", 5)));
    EXPECT_EQ(char_poly_oracle(block_of(WeightParams::from_q(2, 5), 0)), char_poly(block_of(WeightParams::from_q(2, 5), 0)));
    EXPECT_THROW(char_poly_oracle(PolyMatrix::identity(9, 3)), std::invalid_argument);
}

TEST(CharPolyOracle, AgreesWithBerkowitzOnBlocks) {
    for_each_block(3, [](const WeightParams& params, const UtBlock& b) {
        if (b.dim() > 8) return;
        ASSERT_EQ(char_poly(b), char_poly_oracle(b)) << params.q() << " " << params.k << " " << b.residue;
    });
}

TEST(CharPolyOracle, AgreesWithBerkowitzOnRandomMatrices) {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + trial % 6;
            PolyMatrix m = PolyMatrix::square(n, p);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = drinfeld::testing::random_tpoly(rng, p, 3);
            ASSERT_EQ(char_poly(m), char_poly_oracle(m));
            // constant term is (-1)^n det
            TPoly c0 = char_poly(m).coeff(0);
            ASSERT_EQ(n % 2 ? -c0 : c0, drinfeld::testing::leibniz_det(m));
        }
    }
}

TEST(MinPoly, Examples) {
    EXPECT_EQ(min_poly(PolyMatrix::square(2, 7)).to_string(), "X");
    EXPECT_EQ(min_poly(M("[[3*t^4]]", 7)), XPoly::linear(TPoly::parse("3*t^4", 7)));
    EXPECT_EQ(min_poly(PolyMatrix::identity(3, 5).scaled(TPoly::parse("t", 5))).to_string(), "X - t");
}

TEST(MinPoly, QTwoWeightFiveIsCharPoly) {
    const auto b = block_of(WeightParams::from_q(2, 5), 0);
    const XPoly chi = char_poly(b);
    EXPECT_EQ(min_poly(b), chi);
    // exhaustive proper divisors from the factors X, X+t, X^2+t^5
    const std::vector<XPoly> factors{X("X", 2), X("X + t", 2), X("X^2 + t^5", 2)};
    for (unsigned mask = 0; mask < 7; ++mask) {
        XPoly s = XPoly::constant(TPoly::constant(1, 2));
        for (unsigned i = 0; i < 3; ++i)
            if (mask & (1u << i)) s = s * factors[i];
        EXPECT_FALSE(power_sum(s, b.entries).is_zero()) << s.to_string();
    }
    EXPECT_TRUE(power_sum(factors[0] * factors[1] * factors[2], b.entries).is_zero());
}

TEST(MinPoly, AnnihilatesAndDividesCharPoly) {
    for_each_block(3, [](const WeightParams& params, const UtBlock& b) {
        const XPoly m = min_poly(b);
        ASSERT_TRUE(m.is_monic());
        ASSERT_TRUE(power_sum(m, b.entries).is_zero()) << params.q() << " " << params.k << " " << b.residue;
        ASSERT_TRUE(XPoly::divides(m, char_poly(b)));
    });
}

TEST(MinPoly, MultimodularAgreesWithExactKrylov) {
    for_each_block(3, [](const WeightParams& params, const UtBlock& b) {
        ASSERT_EQ(min_poly(b), detail::min_poly_krylov(b.entries)) << params.q() << " " << params.k << " " << b.residue;
    });
    for (int k : {40, 41, 45}) {
        const auto params = WeightParams::from_q(3, k);
        for (const auto& b : build_ut_matrix(params)) ASSERT_EQ(min_poly(b), detail::min_poly_krylov(b.entries)) << k;
    }
}

TEST(MinPoly, IsLeastOnRandomMatrices) {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u}) {
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t n = 2 + trial % 3;
            PolyMatrix m = PolyMatrix::square(n, p);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = trial % 2 ? drinfeld::testing::random_tpoly(rng, p, 2) : TPoly(p);
            if (trial % 4 == 0) m = m + PolyMatrix::identity(n, p).scaled(TPoly::parse("t", p));
            const XPoly mp = min_poly(m);
            ASSERT_TRUE(power_sum(mp, m).is_zero());
            ASSERT_EQ(mp, detail::min_poly_krylov(m));
            // the powers I, M, ..., M^(deg-1) are independent over F_p(t)
            const auto d = static_cast<std::size_t>(mp.degree());
            PolyMatrix powers(n * n, d, p);
            PolyMatrix pw = PolyMatrix::identity(n, p);
            for (std::size_t c = 0; c < d; ++c) {
                for (std::size_t i = 0; i < n * n; ++i) powers(i, c) = pw(i / n, i % n);
                pw = pw * m;
            }
            ASSERT_EQ(powers.rank(), d);
        }
    }
}

TEST(CayleyHamilton, AllBlocks) {
    for_each_block(3, [](const WeightParams& params, const UtBlock& b) {
        ASSERT_TRUE(power_sum(char_poly(b), b.entries).is_zero()) << params.q() << " " << params.k << " " << b.residue;
    });
}

TEST(Verdict, Examples) {
    {
        auto v = diagonalizability_verdict(block_of(WeightParams::from_q(2, 5), 0));
        EXPECT_FALSE(v.diagonalizable);
        EXPECT_EQ(v.witness, WitnessKind::repeated_or_inseparable);
        EXPECT_TRUE(XPoly::divides(X("X^2 + t^5", 2), v.witness_gcd));
        EXPECT_EQ(v.describe(), "repeated_or_inseparable: gcd = X^2 + t^5");
    }
    {
        const auto b = block_of(WeightParams::from_q(25, 33), 1);
        auto v = diagonalizability_verdict(b);
        EXPECT_TRUE(v.diagonalizable);
        EXPECT_EQ(v.char_poly.to_string(), "X^2 - t^28");
        EXPECT_EQ(v.describe(), "separable_min_poly");
    }
    {
        const auto b = block_of(WeightParams::from_q(16, 29), 1);
        EXPECT_EQ(b.entries.to_string(), "[[0, t^17], [t^2, 0]]");
        EXPECT_FALSE(diagonalizability_verdict(b).diagonalizable);
    }
    EXPECT_TRUE(diagonalizability_verdict(PolyMatrix::square(3, 2)).diagonalizable);
    EXPECT_FALSE(diagonalizability_verdict(M("[[t, 1], [0, t]]", 3)).diagonalizable);
}

TEST(Verdict, AntidiagonalDependsOnCharacteristic) {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 20; ++trial) {
            TPoly a = drinfeld::testing::random_tpoly(rng, p, 4), b = drinfeld::testing::random_tpoly(rng, p, 4);
            if (a.is_zero() || b.is_zero()) continue;
            PolyMatrix m = PolyMatrix::square(2, p);
            m(0, 1) = a;
            m(1, 0) = b;
            EXPECT_EQ(diagonalizability_verdict(m).diagonalizable, p != 2) << m.to_string();
        }
    }
}

TEST(Verdict, TwoByTwoCriterion) {
    for (auto q : std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 16, 25})
        for (int k = static_cast<int>(q) + 3; k <= 3 * static_cast<int>(q) - 3; ++k) {
            const auto params = WeightParams::from_q(q, k);
            for (const auto& b : build_ut_matrix(params)) {
                if (b.dim() != 2 || b.entries.is_zero()) continue;
                auto [c, closed] = dim2_closed_form(params, b.residue);
                const TPoly det = b.entries(0, 0) * b.entries(1, 1) - b.entries(0, 1) * b.entries(1, 0);
                const bool expected = !c.alpha.is_zero() || (params.p() != 2 && !det.is_zero());
                ASSERT_EQ(diagonalizability_verdict(b).diagonalizable, expected) << q << " " << k << " " << b.residue;
            }
        }
}

TEST(Verdict, InvariantUnderPermutation) {
    std::mt19937_64 rng(5);
    for_each_block(3, [&](const WeightParams&, const UtBlock& b) {
        if (b.dim() < 2) return;
        std::vector<std::size_t> perm(b.dim());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const PolyMatrix pm = b.entries.permuted(perm);
        const Verdict v = diagonalizability_verdict(b.entries), w = diagonalizability_verdict(pm);
        ASSERT_EQ(v.diagonalizable, w.diagonalizable);
        ASSERT_EQ(v.char_poly, w.char_poly);
        ASSERT_EQ(v.min_poly, w.min_poly);
    });
}

TEST(Eigenpairs, WeightQPlusOne) {
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 16, 25}) {
        const auto params = WeightParams::from_q(q, static_cast<int>(q) + 1);
        const std::uint32_t p = params.p();
        const TPoly one = TPoly::constant(1, p), zero(p), t = TPoly::monomial(1, 1, p);
        const auto b = block_of(params, 0);
        EXPECT_TRUE(verify_eigenpairs(b, {{t, {one, one}}, {zero, {zero, one}}})) << q;
        EXPECT_FALSE(verify_eigenpairs(b, {{t, {zero, one}}})) << q;
    }
}

TEST(Eigenpairs, WeightTwoQ) {
    for (std::uint64_t q : {3, 5, 7, 9, 25}) {
        const auto params = WeightParams::from_q(q, static_cast<int>(2 * q));
        const std::uint32_t p = params.p();
        const TPoly one = TPoly::constant(1, p), zero(p), tq1 = TPoly::monomial(1, q - 1, p);
        const auto b = block_of(params, 0);
        ASSERT_EQ(b.indices, (std::vector<int>{0, static_cast<int>(q) - 1, static_cast<int>(2 * q) - 2}));
        std::vector<EigenPair> pairs{{TPoly::monomial(1, q, p), {zero, one, zero}},
                                     {TPoly::monomial(1, 1, p), {one, one + tq1, one}},
                                     {zero, {zero, tq1, one}}};
        EXPECT_TRUE(verify_eigenpairs(b, pairs)) << q;
        // a repeated eigenvector breaks independence
        pairs[2] = pairs[0];
        EXPECT_FALSE(verify_eigenpairs(b, pairs)) << q;
    }
}

TEST(Eigenpairs, Rejections) {
    const auto b = block_of(WeightParams::from_q(3, 4), 0);
    const TPoly zero(3);
    EXPECT_FALSE(verify_eigenpairs(b, {{zero, {zero, zero}}}));
    EXPECT_THROW(verify_eigenpairs(b, {{zero, {zero}}}), std::invalid_argument);
}

TEST(Eigenpairs, SquareRootEigenvaluesAfterSubstitution) {
    // odd q, k = q+3: M_1 = [[0, a], [b, 0]] with ab = t^(q+3); over F_p(s), t = s^2, the eigenvalues are +-s^(q+3)
    for (std::uint64_t q : {3, 5, 7, 9, 25}) {
        const auto params = WeightParams::from_q(q, static_cast<int>(q) + 3);
        const std::uint32_t p = params.p();
        const PolyMatrix m = block_of(params, 1).entries.substitute_power(2);
        const TPoly lambda = TPoly::monomial(1, q + 3, p);
        std::vector<EigenPair> pairs{{lambda, {m(0, 1), lambda}}, {-lambda, {m(0, 1), -lambda}}};
        EXPECT_TRUE(verify_eigenpairs(m, pairs)) << q;
        // the same vectors are not eigenvectors before substitution
        EXPECT_FALSE(verify_eigenpairs(block_of(params, 1).entries, {{lambda, {m(0, 1), lambda}}})) << q;
    }
}
