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

#ifndef DRINFELD_POLY_MATRIX_HPP
#define DRINFELD_POLY_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpoly.hpp"
#include "xpoly.hpp"

namespace drinfeld {

using TVec = std::vector<TPoly>;

/// Dense matrix over F_p[t], row-major.
class PolyMatrix {
   public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, TPoly(p)) {}
    static PolyMatrix square(std::size_t n, std::uint32_t p) { return PolyMatrix(n, n, p); }
    static PolyMatrix identity(std::size_t n, std::uint32_t p) {
        PolyMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = TPoly::constant(1, p);
        return m;
    }
    /// Builds from nested rows; all rows must have equal length.
    static PolyMatrix from_rows(const std::vector<TVec>& rows, std::uint32_t p) {
        PolyMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) {
                if (rows[i][j].modulus() != p) throw std::invalid_argument("mixed moduli in matrix entries");
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    std::uint32_t modulus() const noexcept { return p_; }

    TPoly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const TPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const noexcept {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) {
        a.check_same_shape(b);
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.cols_ != b.rows_ || a.p_ != b.p_) throw std::invalid_argument("matrix product shape or modulus mismatch");
        PolyMatrix r(a.rows_, b.cols_, a.p_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const TPoly& x = a(i, l);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(l, j).is_zero()) r(i, j) += x * b(l, j);
            }
        return r;
    }
    PolyMatrix scaled(const TPoly& s) const {
        PolyMatrix r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }
    PolyMatrix transposed() const {
        PolyMatrix r(cols_, rows_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    /// Matrix of the same operator after reordering the basis: result(i, j) = M(perm[i], perm[j]).
    PolyMatrix permuted(const std::vector<std::size_t>& perm) const {
        if (!is_square() || perm.size() != rows_) throw std::invalid_argument("permutation size mismatch");
        PolyMatrix r(rows_, cols_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(perm[i], perm[j]);
        return r;
    }
    PolyMatrix substitute_power(std::size_t m) const {
        PolyMatrix r = *this;
        for (auto& x : r.a_) x = x.substitute_power(m);
        return r;
    }

    TVec apply(const TVec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix");
        TVec out(rows_, TPoly(p_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    /// Rank over F_p(t), by fraction-free row reduction.
    std::size_t rank() const;

    /// "[[t, 0], [t^2, -t^26]]".
    std::string to_string(TermOrder order = TermOrder::descending) const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += (*this)(i, j).to_string(order);
            }
            s += "]";
        }
        return s + "]";
    }
    static PolyMatrix parse(std::string_view text, std::uint32_t p) {
        detail::Cursor cur(text);
        std::vector<TVec> rows;
        if (!cur.accept('[')) cur.fail("expected '['");
        if (!cur.accept(']')) {
            do {
                if (!cur.accept('[')) cur.fail("expected '['");
                TVec row;
                do row.push_back(detail::parse_tpoly_terms(cur, p, "t"));
                while (cur.accept(','));
                if (!cur.accept(']')) cur.fail("expected ']'");
                rows.push_back(std::move(row));
            } while (cur.accept(','));
            if (!cur.accept(']')) cur.fail("expected ']'");
        }
        if (!cur.done()) cur.fail("trailing characters");
        return from_rows(rows, p);
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.a_ == b.a_;
    }

   private:
    void check_same_shape(const PolyMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_ || p_ != b.p_) throw std::invalid_argument("matrix shape or modulus mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<TPoly> a_;
};

namespace detail {

// Divides a vector by the gcd of its entries.
inline void remove_content(TVec& v) {
    if (v.empty()) return;
    TPoly g(v[0].modulus());
    for (const auto& x : v) {
        g = TPoly::gcd(g, x);
        if (g.is_one()) return;
    }
    if (g.is_zero()) return;
    for (auto& x : v) x = TPoly::exact_div(x, g);
}

// row <- (pivot/g) * row - (row[col]/g) * pivot_row where g = gcd(pivot, row[col]).
inline void eliminate(TVec& row, const TVec& pivot_row, std::size_t col) {
    if (row[col].is_zero()) return;
    const TPoly& pv = pivot_row[col];
    TPoly g = TPoly::gcd(pv, row[col]);
    TPoly a = TPoly::exact_div(pv, g), b = TPoly::exact_div(row[col], g);
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (pivot_row[i].is_zero()) {
            if (!a.is_one()) row[i] *= a;
        } else {
            row[i] = (a.is_one() ? row[i] : row[i] * a) - b * pivot_row[i];
        }
    }
}

}  // namespace detail

inline std::size_t PolyMatrix::rank() const {
    std::vector<TVec> m(rows_, TVec(cols_, TPoly(p_)));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m[i][j] = (*this)(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m[piv][c].is_zero()) ++piv;
        if (piv == rows_) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows_; ++i) {
            detail::eliminate(m[i], m[r], c);
            detail::remove_content(m[i]);
        }
        ++r;
    }
    return r;
}

/// f(M) by Horner's rule.
inline PolyMatrix evaluate(const XPoly& f, const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("evaluate: matrix must be square");
    const std::size_t n = m.rows();
    PolyMatrix acc = PolyMatrix::square(n, m.modulus());
    for (std::size_t i = f.coefficients().size(); i-- > 0;) {
        acc = acc * m;
        const TPoly& c = f.coefficients()[i];
        if (!c.is_zero())
            for (std::size_t d = 0; d < n; ++d) acc(d, d) += c;
    }
    return acc;
}

/// f(M) v by Horner's rule on vectors.
inline TVec evaluate_on(const XPoly& f, const PolyMatrix& m, const TVec& v) {
    TVec acc(v.size(), TPoly(m.modulus()));
    for (std::size_t i = f.coefficients().size(); i-- > 0;) {
        acc = m.apply(acc);
        const TPoly& c = f.coefficients()[i];
        if (!c.is_zero())
            for (std::size_t d = 0; d < v.size(); ++d) acc[d] += c * v[d];
    }
    return acc;
}

}  // namespace drinfeld

#endif  // DRINFELD_POLY_MATRIX_HPP
