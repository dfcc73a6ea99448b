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

#include <vector>

#include "drinfeld/arith.hpp"

using namespace drinfeld;

TEST(FieldParams, SplitsPrimePowers) {
    auto f = FieldParams::from_q(25);
    EXPECT_EQ(f.p, 5u);
    EXPECT_EQ(f.r, 2u);
    EXPECT_EQ(f.q, 25u);
    EXPECT_EQ(FieldParams::from_q(16).r, 4u);
    EXPECT_EQ(FieldParams::from_q(7).r, 1u);
    EXPECT_EQ(FieldParams::from_q(2).p, 2u);
}

TEST(FieldParams, RejectsNonPrimePowers) {
    for (std::uint64_t q : {0, 1, 6, 12, 100, 36})
        EXPECT_THROW(FieldParams::from_q(q), std::invalid_argument) << q;
    EXPECT_THROW(FieldParams(4, 1), std::invalid_argument);
    EXPECT_THROW(FieldParams(3, 0), std::invalid_argument);
}

TEST(FpElem, Arithmetic) {
    FpElem a(3, 5), b(4, 5);
    EXPECT_EQ((a + b).value(), 2u);
    EXPECT_EQ((a - b).value(), 4u);
    EXPECT_EQ((a * b).value(), 2u);
    EXPECT_EQ((-a).value(), 2u);
    EXPECT_EQ((a * a.inverse()).value(), 1u);
    EXPECT_EQ(FpElem(-1, 7).value(), 6u);
    EXPECT_THROW(FpElem(0, 5).inverse(), std::domain_error);
    EXPECT_THROW(FpElem(1, 5) + FpElem(1, 7), std::invalid_argument);
}

TEST(BinomModP, Examples) {
    EXPECT_EQ(binom_mod_p(5, 2, 3).value(), 1u);
    EXPECT_EQ(binom_mod_p(4, -2, 5).value(), 0u);
    EXPECT_EQ(binom_mod_p(3, 7, 5).value(), 0u);
}

TEST(BinomModP, UpperDigitTermVanishesBelowQMinusOne) {
    // C(q+y, q-1) for 0 <= y <= q-2: the low digits of q+y are those of y, all smaller than those of q-1.
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t r = 1; r <= 3; ++r) {
            std::int64_t q = 1;
            for (std::uint32_t i = 0; i < r; ++i) q *= p;
            for (std::int64_t y = 0; y <= q - 2; ++y) EXPECT_TRUE(binom_mod_p(q + y, q - 1, p).is_zero()) << q << " " << y;
        }
}

TEST(BinomModP, NegativeUpperIndexIsContractViolation) {
    EXPECT_THROW(binom_mod_p(-1, 0, 3), std::domain_error);
    EXPECT_THROW(binom_mod_p(-5, -2, 3), std::domain_error);
}

TEST(BinomModP, MatchesPascalTriangle) {
    const int n_max = 600;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        std::vector<std::uint32_t> row{1};
        for (int n = 0; n <= n_max; ++n) {
            for (int m = 0; m <= n; ++m) ASSERT_EQ(binom_mod_p(n, m, p).value(), row[static_cast<std::size_t>(m)]) << n << " " << m << " " << p;
            std::vector<std::uint32_t> next(row.size() + 1, 0);
            for (std::size_t m = 0; m < next.size(); ++m)
                next[m] = ((m < row.size() ? row[m] : 0) + (m ? row[m - 1] : 0)) % p;
            row = std::move(next);
        }
    }
}

TEST(BinomModP, EdgesAndSymmetry) {
    for (std::uint32_t p : {2u, 3u, 5u, 13u})
        for (int n = 0; n <= 300; ++n) {
            EXPECT_EQ(binom_mod_p(n, 0, p).value(), 1u);
            EXPECT_EQ(binom_mod_p(n, n, p).value(), 1u);
            for (int m = 0; m <= n; m += 7) EXPECT_EQ(binom_mod_p(n, m, p), binom_mod_p(n, n - m, p));
        }
}

TEST(SignPow, Examples) {
    EXPECT_EQ(sign_pow(3, 5).value(), 4u);
    EXPECT_EQ(sign_pow(2, 7).value(), 1u);
    EXPECT_EQ(sign_pow(1, 2).value(), 1u);
    EXPECT_EQ(sign_pow(0, 3).value(), 1u);
}
