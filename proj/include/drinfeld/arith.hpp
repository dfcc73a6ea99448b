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

#ifndef DRINFELD_ARITH_HPP
#define DRINFELD_ARITH_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace drinfeld {

/// Characteristic p, exponent r and cardinality q = p^r of the constant field F_q.
struct FieldParams {
    std::uint32_t p = 2;
    std::uint32_t r = 1;
    std::uint64_t q = 2;

    FieldParams() = default;
    FieldParams(std::uint32_t prime, std::uint32_t exponent);

    /// Splits q into p^r. Throws std::invalid_argument if q is not a prime power.
    static FieldParams from_q(std::uint64_t q);

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline FieldParams::FieldParams(std::uint32_t prime, std::uint32_t exponent) : p(prime), r(exponent), q(1) {
    if (!is_prime(prime)) throw std::invalid_argument("p must be prime, got " + std::to_string(prime));
    if (exponent < 1) throw std::invalid_argument("r must be at least 1");
    for (std::uint32_t i = 0; i < exponent; ++i) {
        if (q > (std::uint64_t{1} << 40) / prime) throw std::invalid_argument("q = p^r too large");
        q *= prime;
    }
}

inline FieldParams FieldParams::from_q(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;
    std::uint64_t rest = q;
    std::uint32_t r = 0;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1 || p > 0xffffffffu) throw std::invalid_argument("q must be a prime power");
    return FieldParams(static_cast<std::uint32_t>(p), r);
}

/// Element of the prime field F_p. The modulus travels with the value so that
/// mixing elements of different fields is caught at runtime.
class FpElem {
   public:
    FpElem() = default;
    FpElem(std::int64_t v, std::uint32_t p) : p_(p) {
        if (p < 2) throw std::invalid_argument("modulus must be at least 2");
        std::int64_t m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += p;
        v_ = static_cast<std::uint32_t>(m);
    }

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FpElem operator+(const FpElem& o) const {
        check(o);
        std::uint64_t s = std::uint64_t{v_} + o.v_;
        return raw(static_cast<std::uint32_t>(s >= p_ ? s - p_ : s), p_);
    }
    FpElem operator-(const FpElem& o) const {
        check(o);
        return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_), p_);
    }
    FpElem operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    FpElem operator*(const FpElem& o) const {
        check(o);
        return raw(static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_), p_);
    }
    FpElem& operator+=(const FpElem& o) { return *this = *this + o; }
    FpElem& operator-=(const FpElem& o) { return *this = *this - o; }
    FpElem& operator*=(const FpElem& o) { return *this = *this * o; }

    FpElem pow(std::uint64_t e) const {
        FpElem result = raw(1 % p_, p_), base = *this;
        while (e) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }
    /// Multiplicative inverse; p is assumed prime.
    FpElem inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
        return pow(p_ - 2);
    }

    friend bool operator==(const FpElem& a, const FpElem& b) noexcept { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend std::ostream& operator<<(std::ostream& os, const FpElem& a) { return os << a.v_; }

   private:
    static FpElem raw(std::uint32_t v, std::uint32_t p) {
        FpElem e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }
    void check(const FpElem& o) const {
        if (o.p_ != p_) throw std::invalid_argument("mixed moduli in F_p arithmetic");
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 2;
};

namespace detail {

// C(a, b) mod p for 0 <= b <= a < p.
inline std::uint32_t small_binom(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t i = 1; i <= b; ++i) {
        num = num * (a - b + i) % p;
        den = den * i % p;
    }
    return static_cast<std::uint32_t>(num * FpElem(static_cast<std::int64_t>(den), p).inverse().value() % p);
}

}  // namespace detail

/// C(n, m) mod p by Lucas's theorem on the base-p digits of n and m.
/// C(n, m) = 0 for m < 0 or m > n. A negative n is a caller bug and throws std::domain_error.
inline FpElem binom_mod_p(std::int64_t n, std::int64_t m, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("binom_mod_p: modulus must be prime");
    if (n < 0) throw std::domain_error("binom_mod_p: negative upper index " + std::to_string(n));
    if (m < 0 || m > n) return FpElem(0, p);
    std::uint64_t result = 1;
    while (m > 0 || n > 0) {
        auto nd = static_cast<std::uint32_t>(n % p);
        auto md = static_cast<std::uint32_t>(m % p);
        if (md > nd) return FpElem(0, p);
        result = result * detail::small_binom(nd, md, p) % p;
        n /= p;
        m /= p;
    }
    return FpElem(static_cast<std::int64_t>(result), p);
}

/// (-1)^j in F_p.
inline FpElem sign_pow(std::int64_t j, std::uint32_t p) {
    if (j < 0) throw std::domain_error("sign_pow: negative exponent");
    return FpElem((j % 2 == 0) ? 1 : -1, p);
}

}  // namespace drinfeld

#endif  // DRINFELD_ARITH_HPP
