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

#ifndef DRINFELD_XPOLY_HPP
#define DRINFELD_XPOLY_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratfun.hpp"
#include "residue_field.hpp"
#include "tpoly.hpp"

namespace drinfeld {

/// Polynomial in X with coefficients in F_p[t], ascending in X.
/// Never carries a zero leading coefficient; the zero polynomial is empty.
class XPoly {
   public:
    XPoly() = default;
    explicit XPoly(std::uint32_t p) : p_(p) {}
    XPoly(std::vector<TPoly> coeffs, std::uint32_t p) : p_(p), c_(std::move(coeffs)) {
        for (const auto& c : c_)
            if (c.modulus() != p_) throw std::invalid_argument("mixed moduli in XPoly coefficients");
        trim();
    }

    static XPoly constant(const TPoly& c) { return XPoly({c}, c.modulus()); }
    /// X^e.
    static XPoly x_power(std::size_t e, std::uint32_t p) {
        std::vector<TPoly> c(e + 1, TPoly(p));
        c[e] = TPoly::constant(1, p);
        return XPoly(std::move(c), p);
    }
    /// X - a.
    static XPoly linear(const TPoly& a) { return XPoly({-a, TPoly::constant(1, a.modulus())}, a.modulus()); }

    std::uint32_t modulus() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    TPoly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : TPoly(p_); }
    const TPoly& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero XPoly");
        return c_.back();
    }
    const std::vector<TPoly>& coefficients() const noexcept { return c_; }
    /// Monic in X (leading coefficient is the constant 1).
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
    /// Largest t-degree among the coefficients.
    int t_degree() const noexcept {
        int d = -1;
        for (const auto& c : c_) d = std::max(d, c.degree());
        return d;
    }

    XPoly operator-() const {
        XPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    XPoly& operator+=(const XPoly& o) {
        check(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), TPoly(p_));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    XPoly& operator-=(const XPoly& o) { return *this += -o; }
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return XPoly(a.p_);
        std::vector<TPoly> r(a.c_.size() + b.c_.size() - 1, TPoly(a.p_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
        }
        return XPoly(std::move(r), a.p_);
    }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }
    XPoly scaled(const TPoly& s) const {
        std::vector<TPoly> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(c * s);
        return XPoly(std::move(r), p_);
    }
    XPoly substitute_power(std::size_t m) const {
        std::vector<TPoly> r;
        for (const auto& c : c_) r.push_back(c.substitute_power(m));
        return XPoly(std::move(r), p_);
    }

    /// Formal d/dX; the factor i is taken in F_p, so X^p differentiates to 0.
    XPoly derivative() const {
        if (c_.size() <= 1) return XPoly(p_);
        std::vector<TPoly> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].scaled(FpElem(static_cast<std::int64_t>(i % p_), p_)));
        return XPoly(std::move(r), p_);
    }

    /// Monic gcd of the t-coefficients (0 for the zero polynomial).
    TPoly content() const {
        TPoly g(p_);
        for (const auto& c : c_) {
            if (g.is_one()) break;
            g = TPoly::gcd(g, c);
        }
        return g;
    }
    /// Divides out the content and scales so that the leading X-coefficient has leading t-coefficient 1.
    XPoly primitive_part() const {
        if (is_zero()) return *this;
        TPoly g = content();
        std::vector<TPoly> r;
        r.reserve(c_.size());
        FpElem s = (TPoly::exact_div(c_.back(), g)).leading().inverse();
        for (const auto& c : c_) r.push_back(TPoly::exact_div(c, g).scaled(s));
        return XPoly(std::move(r), p_);
    }

    /// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g in F_p[t][X].
    static XPoly pseudo_remainder(const XPoly& f, const XPoly& g) {
        f.check(g);
        if (g.is_zero()) throw std::domain_error("pseudo-remainder by zero XPoly");
        XPoly r = f;
        const TPoly& lg = g.leading();
        const int dg = g.degree();
        int steps = f.degree() - dg + 1;
        while (!r.is_zero() && r.degree() >= dg) {
            TPoly lr = r.leading();
            auto shift = static_cast<std::size_t>(r.degree() - dg);
            XPoly next = r.scaled(lg);
            for (std::size_t i = 0; i < g.c_.size(); ++i) next.c_[i + shift] -= lr * g.c_[i];
            next.trim();
            r = std::move(next);
            --steps;
        }
        for (; steps > 0; --steps) r = r.scaled(lg);
        return r;
    }
    /// True iff g divides f in F_p(t)[X].
    static bool divides(const XPoly& g, const XPoly& f) {
        if (g.is_zero()) return f.is_zero();
        if (f.is_zero()) return true;
        return pseudo_remainder(f.primitive_part(), g.primitive_part()).is_zero();
    }
    /// f / g where the quotient is known to lie in F_p[t][X] (true when g is primitive and divides f).
    /// Throws std::domain_error otherwise.
    static XPoly exact_div(const XPoly& f, const XPoly& g) {
        f.check(g);
        if (g.is_zero()) throw std::domain_error("XPoly division by zero");
        if (f.degree() < g.degree()) {
            if (f.is_zero()) return XPoly(f.p_);
            throw std::domain_error("XPoly exact division has a remainder");
        }
        XPoly r = f;
        std::vector<TPoly> q(static_cast<std::size_t>(f.degree() - g.degree() + 1), TPoly(f.p_));
        while (!r.is_zero() && r.degree() >= g.degree()) {
            auto shift = static_cast<std::size_t>(r.degree() - g.degree());
            TPoly m = TPoly::exact_div(r.leading(), g.leading());
            q[shift] = m;
            for (std::size_t i = 0; i < g.c_.size(); ++i) r.c_[i + shift] -= m * g.c_[i];
            r.trim();
        }
        if (!r.is_zero()) throw std::domain_error("XPoly exact division has a remainder");
        return XPoly(std::move(q), f.p_);
    }

    /// Evaluates at X = x in F_p[t].
    TPoly evaluate(const TPoly& x) const {
        TPoly acc(p_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Monomial notation, e.g. "X^4 + t*X^3 + t^5*X^2 + t^6*X". Coefficients of X^i (i >= 1) with more than
    /// one term are parenthesised.
    std::string to_string(TermOrder order = TermOrder::descending) const;
    static XPoly parse(std::string_view text, std::uint32_t p);

    friend bool operator==(const XPoly& a, const XPoly& b) noexcept { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend std::ostream& operator<<(std::ostream& os, const XPoly& a) { return os << a.to_string(); }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void check(const XPoly& o) const {
        if (o.p_ != p_) throw std::invalid_argument("mixed moduli in XPoly arithmetic");
    }

    std::uint32_t p_ = 2;
    std::vector<TPoly> c_;
};

namespace detail {

// Degree of gcd(f mod ell, g mod ell) over F_p[t]/(ell).
inline int reduced_gcd_degree(const XPoly& f, const XPoly& g, const TPoly& ell) {
    auto reduce = [&](const XPoly& h) {
        std::vector<TPoly> v;
        for (const auto& c : h.coefficients()) v.push_back(c % ell);
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        return v;
    };
    std::vector<TPoly> a = reduce(f), b = reduce(g);
    while (!b.empty()) {
        const TPoly inv = inverse_mod(b.back(), ell);
        while (a.size() >= b.size()) {
            const TPoly lead = (a.back() * inv) % ell;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i + 1 < b.size(); ++i) a[i + shift] = (a[i + shift] - lead * b[i]) % ell;
            a.pop_back();
            while (!a.empty() && a.back().is_zero()) a.pop_back();
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// True when gcd(f, g) over F_p(t) is certainly 1: f is monic in X, so its monic gcd with g has coefficients in
// F_p[t] and reduces to a common divisor of the reductions modulo any ell.
inline bool coprime_by_reduction(const XPoly& f, const XPoly& g) {
    if (f.degree() < 1 || !f.leading().is_one() || g.is_zero()) return false;
    IrreducibleSequence ells(f.modulus(), IrreducibleSequence::default_degree(f.modulus()));
    for (int attempt = 0; attempt < 3; ++attempt)
        if (reduced_gcd_degree(f, g, ells.next()) == 0) return true;
    return false;
}

}  // namespace detail

/// gcd in F_p(t)[X] by monic Euclidean division over the fraction field, returned with denominators
/// and content cleared (see XPoly::primitive_part). gcd(f, 0) is the normalized f.
inline XPoly gcd_over_fraction_field(const XPoly& f, const XPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    if (f.modulus() != g.modulus()) throw std::invalid_argument("mixed moduli in gcd");
    const std::uint32_t p = f.modulus();
    if (detail::coprime_by_reduction(f, g) || detail::coprime_by_reduction(g, f)) return XPoly::constant(TPoly::constant(1, p));
    using RVec = std::vector<RatFun>;
    auto lift = [](const XPoly& h) {
        RVec v;
        for (const auto& c : h.coefficients()) v.emplace_back(c);
        return v;
    };
    auto trim = [](RVec& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    auto make_monic = [](RVec& v) {
        RatFun inv = v.back().inverse();
        for (auto& c : v) c = c * inv;
    };
    RVec a = lift(f), b = lift(g);
    if (!b.empty()) make_monic(b);
    while (!b.empty()) {
        // a <- a mod b, with b monic
        while (!a.empty() && a.size() >= b.size()) {
            RatFun lead = a.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i + 1 < b.size(); ++i) a[i + shift] = a[i + shift] - lead * b[i];
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
        if (!b.empty()) make_monic(b);
    }
    // clear denominators
    TPoly l = TPoly::constant(1, p);
    for (const auto& c : a) l = TPoly::exact_div(l * c.den(), TPoly::gcd(l, c.den()));
    std::vector<TPoly> out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(c.num() * TPoly::exact_div(l, c.den()));
    return XPoly(std::move(out), p).primitive_part();
}

/// lcm in F_p(t)[X], normalized like gcd_over_fraction_field.
inline XPoly lcm_over_fraction_field(const XPoly& f, const XPoly& g) {
    if (f.is_zero() || g.is_zero()) return XPoly(f.modulus());
    XPoly fp = f.primitive_part(), gp = g.primitive_part();
    XPoly d = gcd_over_fraction_field(fp, gp);
    return (fp * XPoly::exact_div(gp, d)).primitive_part();
}

/// True iff gcd(f, f') is constant in X, i.e. f is squarefree with separable irreducible factors.
inline bool is_separable_squarefree(const XPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("separability test of the zero polynomial");
    if (f.degree() == 0) return true;
    return gcd_over_fraction_field(f, f.derivative()).degree() == 0;
}

inline std::string XPoly::to_string(TermOrder order) const {
    if (is_zero()) return "0";
    std::string out;
    auto emit = [&](std::size_t i) {
        const TPoly& c = c_[i];
        if (c.is_zero()) return;
        std::string xpow = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
        if (i == 0) {
            // constant term: expand the coefficient inline
            const auto& cs = c.coefficients();
            auto put = [&](std::size_t e) {
                if (!cs[e]) return;
                auto [neg, body] = detail::render_term(cs[e], e, p_, "t");
                detail::append_signed(out, neg, body);
            };
            if (order == TermOrder::descending)
                for (std::size_t e = cs.size(); e-- > 0;) put(e);
            else
                for (std::size_t e = 0; e < cs.size(); ++e) put(e);
            return;
        }
        if (c.is_monomial()) {
            auto e = static_cast<std::size_t>(c.degree());
            auto [neg, body] = detail::render_term(c.coefficients()[e], e, p_, "t");
            if (body == "1")
                body = xpow;
            else
                body += "*" + xpow;
            detail::append_signed(out, neg, body);
        } else {
            detail::append_signed(out, false, "(" + c.to_string(order) + ")*" + xpow);
        }
    };
    if (order == TermOrder::descending)
        for (std::size_t i = c_.size(); i-- > 0;) emit(i);
    else
        for (std::size_t i = 0; i < c_.size(); ++i) emit(i);
    return out;
}

inline XPoly XPoly::parse(std::string_view text, std::uint32_t p) {
    detail::Cursor cur(text);
    if (cur.done()) cur.fail("empty polynomial");
    std::vector<TPoly> acc;
    auto add = [&](std::size_t e, const TPoly& c) {
        if (acc.size() <= e) acc.resize(e + 1, TPoly(p));
        acc[e] += c;
    };
    bool first = true;
    while (!cur.done()) {
        bool neg = false;
        if (cur.accept('-'))
            neg = true;
        else if (!cur.accept('+') && !first)
            cur.fail("expected '+' or '-'");
        first = false;
        TPoly coef = TPoly::constant(1, p);
        std::size_t xe = 0;
        if (cur.accept('(')) {
            coef = detail::parse_tpoly_terms(cur, p, "t");
            if (!cur.accept(')')) cur.fail("expected ')'");
            if (!cur.accept('*')) cur.fail("expected '*' after parenthesised coefficient");
            xe = detail::parse_power(cur, "X");
            if (xe == 0) cur.fail("expected X");
        } else {
            std::uint64_t num = 1;
            std::size_t te = 0;
            bool more = true;
            if (cur.at_digit()) {
                num = cur.number();
                more = cur.accept('*');
            }
            if (more) {
                te = detail::parse_power(cur, "t");
                if (te > 0) more = cur.accept('*');
            }
            if (more) {
                xe = detail::parse_power(cur, "X");
                if (xe == 0) cur.fail("expected t or X");
            }
            coef = TPoly::monomial(static_cast<std::int64_t>(num % p), te, p);
        }
        add(xe, neg ? -coef : coef);
    }
    return XPoly(std::move(acc), p);
}

}  // namespace drinfeld

#endif  // DRINFELD_XPOLY_HPP
