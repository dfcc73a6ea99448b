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

#ifndef DRINFELD_RATFUN_HPP
#define DRINFELD_RATFUN_HPP

#include <stdexcept>
#include <utility>

#include "tpoly.hpp"

namespace drinfeld {

/// Element of F_p(t) kept in lowest terms with a monic denominator.
class RatFun {
   public:
    RatFun() : RatFun(2u) {}
    explicit RatFun(std::uint32_t p) : num_(p), den_(TPoly::constant(1, p)) {}
    explicit RatFun(TPoly num) : num_(std::move(num)), den_(TPoly::constant(1, num_.modulus())) {}
    RatFun(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFun with zero denominator");
        normalize();
    }

    const TPoly& num() const noexcept { return num_; }
    const TPoly& den() const noexcept { return den_; }
    std::uint32_t modulus() const noexcept { return num_.modulus(); }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RatFun operator-() const { return from_reduced(-num_, den_); }
    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return RatFun(a.modulus());
        // cross-cancel before multiplying to keep degrees small
        TPoly g1 = TPoly::gcd(a.num_, b.den_), g2 = TPoly::gcd(b.num_, a.den_);
        return from_reduced(TPoly::exact_div(a.num_, g1) * TPoly::exact_div(b.num_, g2),
                            TPoly::exact_div(a.den_, g2) * TPoly::exact_div(b.den_, g1));
    }
    RatFun inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in F_p(t)");
        return RatFun(den_, num_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

    friend bool operator==(const RatFun& a, const RatFun& b) noexcept { return a.num_ == b.num_ && a.den_ == b.den_; }

   private:
    // num/den already coprime; only the denominator needs to be made monic.
    static RatFun from_reduced(TPoly num, TPoly den) {
        RatFun r(num.modulus());
        FpElem s = den.leading().inverse();
        r.num_ = num.scaled(s);
        r.den_ = den.scaled(s);
        return r;
    }
    void normalize() {
        if (num_.is_zero()) {
            den_ = TPoly::constant(1, num_.modulus());
            return;
        }
        TPoly g = TPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = TPoly::exact_div(num_, g);
            den_ = TPoly::exact_div(den_, g);
        }
        FpElem s = den_.leading().inverse();
        num_ = num_.scaled(s);
        den_ = den_.scaled(s);
    }

    TPoly num_;
    TPoly den_;
};

}  // namespace drinfeld

#endif  // DRINFELD_RATFUN_HPP
