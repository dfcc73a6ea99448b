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

#ifndef DRINFELD_TPOLY_HPP
#define DRINFELD_TPOLY_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace drinfeld {

/// Term order used when rendering polynomials as text.
enum class TermOrder { descending, ascending };

/// Dense polynomial in t over F_p, coefficients stored in ascending order.
/// The zero polynomial has no coefficients and there are never trailing zeros.
class TPoly {
   public:
    TPoly() = default;
    explicit TPoly(std::uint32_t p) : p_(p) {}
    TPoly(std::vector<std::uint32_t> coeffs, std::uint32_t p) : p_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= p_;
        trim();
    }

    static TPoly constant(const FpElem& c) { return monomial(c, 0); }
    static TPoly constant(std::int64_t c, std::uint32_t p) { return constant(FpElem(c, p)); }
    static TPoly monomial(const FpElem& c, std::size_t e) {
        TPoly r(c.modulus());
        if (!c.is_zero()) {
            r.c_.assign(e + 1, 0);
            r.c_[e] = c.value();
        }
        return r;
    }
    static TPoly monomial(std::int64_t c, std::size_t e, std::uint32_t p) { return monomial(FpElem(c, p), e); }

    std::uint32_t modulus() const noexcept { return p_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// Number of nonzero coefficients.
    std::size_t term_count() const noexcept {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](auto x) { return x != 0; }));
    }
    bool is_monomial() const noexcept { return term_count() == 1; }
    /// Lowest exponent carrying a nonzero coefficient; -1 for zero.
    int valuation() const noexcept {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i]) return static_cast<int>(i);
        return -1;
    }

    FpElem coeff(std::size_t i) const { return FpElem(i < c_.size() ? c_[i] : 0, p_); }
    FpElem leading() const { return coeff(c_.empty() ? 0 : c_.size() - 1); }
    const std::vector<std::uint32_t>& coefficients() const noexcept { return c_; }

    TPoly operator-() const {
        TPoly r = *this;
        for (auto& x : r.c_) x = x ? p_ - x : 0;
        return r;
    }
    TPoly& operator+=(const TPoly& o) {
        check(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            std::uint32_t s = c_[i] + o.c_[i];
            c_[i] = s >= p_ ? s - p_ : s;
        }
        trim();
        return *this;
    }
    TPoly& operator-=(const TPoly& o) {
        check(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + (p_ - o.c_[i]);
        trim();
        return *this;
    }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }

    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        a.check(b);
        TPoly r(a.p_);
        if (a.is_zero() || b.is_zero()) return r;
        if (b.is_monomial() && !a.is_monomial()) return b * a;
        const std::uint64_t p = a.p_;
        std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
        if (p < (1u << 16)) {
            // products stay below 2^32, so 2^32 of them fit in the accumulator
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                const std::uint64_t ai = a.c_[i];
                if (!ai) continue;
                std::uint64_t* out = acc.data() + i;
                for (std::size_t j = 0; j < b.c_.size(); ++j) out[j] += ai * b.c_[j];
            }
            for (auto& x : acc) x %= p;
        } else {
            for (std::size_t i = 0; i < a.c_.size(); ++i) {
                if (!a.c_[i]) continue;
                for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
            }
        }
        r.c_.assign(acc.begin(), acc.end());
        r.trim();
        return r;
    }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    TPoly scaled(const FpElem& s) const {
        if (s.modulus() != p_) throw std::invalid_argument("mixed moduli in TPoly scaling");
        TPoly r = *this;
        for (auto& x : r.c_) x = static_cast<std::uint32_t>(std::uint64_t{x} * s.value() % p_);
        r.trim();
        return r;
    }
    /// Multiplication by t^e.
    TPoly shifted(std::size_t e) const {
        TPoly r = *this;
        if (!r.is_zero()) r.c_.insert(r.c_.begin(), e, 0);
        return r;
    }
    /// The substitution t -> t^m.
    TPoly substitute_power(std::size_t m) const {
        if (m == 0) throw std::invalid_argument("substitute_power: exponent must be positive");
        if (is_zero()) return *this;
        TPoly r(p_);
        r.c_.assign((c_.size() - 1) * m + 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * m] = c_[i];
        return r;
    }
    TPoly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inverse());
    }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<TPoly, TPoly> divmod(const TPoly& a, const TPoly& b) {
        a.check(b);
        if (b.is_zero()) throw std::domain_error("TPoly division by zero");
        TPoly quot(a.p_), rem = a;
        if (a.degree() < b.degree()) return {quot, rem};
        const std::uint64_t p = a.p_;
        const std::uint64_t inv = b.leading().inverse().value();
        const std::size_t db = b.c_.size() - 1;
        quot.c_.assign(a.c_.size() - db, 0);
        for (std::size_t i = rem.c_.size(); i-- > db;) {
            const std::uint64_t lc = rem.c_[i];
            if (!lc) continue;
            const std::uint64_t f = lc * inv % p;
            quot.c_[i - db] = static_cast<std::uint32_t>(f);
            const std::uint64_t nf = p - f;
            for (std::size_t j = 0; j <= db; ++j) {
                if (!b.c_[j]) continue;
                rem.c_[i - db + j] = static_cast<std::uint32_t>((rem.c_[i - db + j] + nf * b.c_[j]) % p);
            }
        }
        quot.trim();
        rem.trim();
        return {quot, rem};
    }
    friend TPoly operator/(const TPoly& a, const TPoly& b) { return divmod(a, b).first; }
    friend TPoly operator%(const TPoly& a, const TPoly& b) { return divmod(a, b).second; }

    /// Quotient a / b, throwing std::domain_error unless b divides a.
    static TPoly exact_div(const TPoly& a, const TPoly& b) {
        if (b.is_monomial()) {
            // common case in this library: divide by c*t^e
            const auto e = static_cast<std::size_t>(b.degree());
            if (a.valuation() >= 0 && static_cast<std::size_t>(a.valuation()) < e)
                throw std::domain_error("TPoly exact division has a remainder");
            TPoly r = a.scaled(b.leading().inverse());
            if (!r.is_zero()) r.c_.erase(r.c_.begin(), r.c_.begin() + static_cast<std::ptrdiff_t>(e));
            return r;
        }
        auto [quot, rem] = divmod(a, b);
        if (!rem.is_zero()) throw std::domain_error("TPoly exact division has a remainder");
        return quot;
    }

    /// Monic gcd; gcd(0, 0) = 0.
    static TPoly gcd(TPoly a, TPoly b) {
        a.check(b);
        while (!b.is_zero()) {
            TPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    FpElem evaluate(const FpElem& x) const {
        FpElem acc(0, p_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + coeff(i);
        return acc;
    }

    /// Sparse monomial notation, e.g. "t^5 + 2*t^2" or "-t^26". The coefficient p-1 is written as a
    /// leading minus sign when p is odd.
    std::string to_string(TermOrder order = TermOrder::descending, std::string_view var = "t") const;
    /// Inverse of to_string for either term order. Coefficients may be any integers; they are reduced mod p.
    static TPoly parse(std::string_view text, std::uint32_t p, std::string_view var = "t");

    friend bool operator==(const TPoly& a, const TPoly& b) noexcept { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend std::ostream& operator<<(std::ostream& os, const TPoly& a) { return os << a.to_string(); }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const TPoly& o) const {
        if (o.p_ != p_) throw std::invalid_argument("mixed moduli in TPoly arithmetic");
    }

    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> c_;
};

namespace detail {

// Signed rendering of the single term c*var^e: returns (negative, magnitude text).
inline std::pair<bool, std::string> render_term(std::uint32_t c, std::size_t e, std::uint32_t p, std::string_view var) {
    bool neg = p > 2 && c == p - 1;
    std::uint32_t mag = neg ? 1 : c;
    std::string power;
    if (e >= 1) power = std::string(var);
    if (e >= 2) power += "^" + std::to_string(e);
    std::string out;
    if (power.empty())
        out = std::to_string(mag);
    else if (mag == 1)
        out = power;
    else
        out = std::to_string(mag) + "*" + power;
    return {neg, out};
}

inline void append_signed(std::string& out, bool neg, const std::string& body) {
    if (out.empty())
        out = neg ? "-" + body : body;
    else
        out += (neg ? " - " : " + ") + body;
}

class Cursor {
   public:
    explicit Cursor(std::string_view s) : s_(s) {}
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }
    bool accept(std::string_view word) {
        skip_ws();
        if (s_.substr(i_, word.size()) == word) {
            i_ += word.size();
            return true;
        }
        return false;
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    std::uint64_t number() {
        skip_ws();
        if (!at_digit()) fail("expected a number");
        std::uint64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[i_] - '0');
            if (v > (std::uint64_t{1} << 48)) fail("number too large");
            ++i_;
        }
        return v;
    }
    std::size_t pos() const noexcept { return i_; }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(i_) + " in \"" + std::string(s_) + "\": " + what);
    }

   private:
    std::string_view s_;
    std::size_t i_ = 0;
};

// Parses "var" or "var^e" if present; returns the exponent (0 when the variable is absent).
inline std::size_t parse_power(Cursor& cur, std::string_view var) {
    if (!cur.accept(var)) return 0;
    if (cur.accept('^')) return static_cast<std::size_t>(cur.number());
    return 1;
}

// Sum of signed monomials up to a closing parenthesis, an X factor, or end of input.
inline TPoly parse_tpoly_terms(Cursor& cur, std::uint32_t p, std::string_view var) {
    TPoly acc(p);
    bool first = true;
    while (true) {
        bool neg = false;
        if (cur.accept('-'))
            neg = true;
        else if (!first && !cur.accept('+'))
            break;
        else if (first)
            cur.accept('+');
        std::uint64_t coef = 1;
        std::size_t e = 0;
        if (cur.at_digit()) {
            coef = cur.number();
            if (cur.accept('*')) {
                e = parse_power(cur, var);
                if (e == 0) cur.fail("expected variable after '*'");
            }
        } else {
            e = parse_power(cur, var);
            if (e == 0) cur.fail("expected a term");
        }
        TPoly term = TPoly::monomial(static_cast<std::int64_t>(coef % p), e, p);
        acc += neg ? -term : term;
        first = false;
        if (cur.peek() != '+' && cur.peek() != '-') break;
    }
    return acc;
}

}  // namespace detail

inline std::string TPoly::to_string(TermOrder order, std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    auto emit = [&](std::size_t i) {
        if (!c_[i]) return;
        auto [neg, body] = detail::render_term(c_[i], i, p_, var);
        detail::append_signed(out, neg, body);
    };
    if (order == TermOrder::descending)
        for (std::size_t i = c_.size(); i-- > 0;) emit(i);
    else
        for (std::size_t i = 0; i < c_.size(); ++i) emit(i);
    return out;
}

inline TPoly TPoly::parse(std::string_view text, std::uint32_t p, std::string_view var) {
    detail::Cursor cur(text);
    if (cur.done()) cur.fail("empty polynomial");
    TPoly r = detail::parse_tpoly_terms(cur, p, var);
    if (!cur.done()) cur.fail("trailing characters");
    return r;
}

}  // namespace drinfeld

#endif  // DRINFELD_TPOLY_HPP
