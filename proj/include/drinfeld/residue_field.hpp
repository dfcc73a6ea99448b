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

#ifndef DRINFELD_RESIDUE_FIELD_HPP
#define DRINFELD_RESIDUE_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tpoly.hpp"

namespace drinfeld {

/// Inverse of a in the finite field F_p[t]/(ell), ell irreducible.
inline TPoly inverse_mod(const TPoly& a, const TPoly& ell) {
    TPoly r0 = ell, r1 = a % ell, s0(ell.modulus()), s1 = TPoly::constant(1, ell.modulus());
    while (!r1.is_zero()) {
        auto [quot, rem] = TPoly::divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        TPoly s2 = s0 - quot * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::domain_error("inverse_mod: element is not invertible");
    return s0.scaled(r0.leading().inverse()) % ell;
}

/// Ben-Or test: ell of degree e is irreducible iff gcd(ell, t^(p^i) - t) = 1 for 1 <= i <= e/2.
inline bool is_irreducible(const TPoly& ell) {
    const std::uint32_t p = ell.modulus();
    const int e = ell.degree();
    if (e < 1) return false;
    const TPoly t = TPoly::monomial(1, 1, p);
    TPoly h = t % ell;
    for (int i = 1; 2 * i <= e; ++i) {
        TPoly pw = TPoly::constant(1, p), base = h;
        for (std::uint32_t x = p; x; x >>= 1) {
            if (x & 1) pw = (pw * base) % ell;
            base = (base * base) % ell;
        }
        h = pw;
        if (TPoly::gcd(ell, h - t).degree() != 0) return false;
    }
    return true;
}

/// Monic irreducibles of a fixed degree over F_p, in a fixed order.
class IrreducibleSequence {
   public:
    IrreducibleSequence(std::uint32_t p, int degree) : p_(p), e_(degree) {
        if (degree < 1) throw std::invalid_argument("IrreducibleSequence: degree must be positive");
    }
    /// Smallest degree e with p^e >= 4096, so that there are plenty of irreducibles to draw from.
    static int default_degree(std::uint32_t p) {
        int e = 1;
        for (std::uint64_t size = p; size < 4096; size *= p) ++e;
        return e;
    }

    int degree() const noexcept { return e_; }

    TPoly next() {
        for (;; ++code_) {
            std::vector<std::uint32_t> c(static_cast<std::size_t>(e_) + 1, 0);
            c.back() = 1;
            std::uint64_t x = code_;
            for (int i = 0; i < e_ && x; ++i, x /= p_) c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x % p_);
            if (x) throw std::runtime_error("IrreducibleSequence exhausted");
            TPoly ell(std::move(c), p_);
            if (is_irreducible(ell)) {
                ++code_;
                return ell;
            }
        }
    }

   private:
    std::uint32_t p_;
    int e_;
    std::uint64_t code_ = 1;
};

}  // namespace drinfeld

#endif  // DRINFELD_RESIDUE_FIELD_HPP
