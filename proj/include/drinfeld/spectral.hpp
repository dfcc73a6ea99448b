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

#ifndef DRINFELD_SPECTRAL_HPP
#define DRINFELD_SPECTRAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke.hpp"
#include "poly_matrix.hpp"
#include "residue_field.hpp"
#include "xpoly.hpp"

namespace drinfeld {

/// det(X*I - M) by Berkowitz's algorithm. Uses only ring operations of F_p[t], so it is valid in every
/// characteristic.
inline XPoly char_poly(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: matrix must be square");
    const std::uint32_t p = m.modulus();
    const std::size_t n = m.rows();
    // coefficients of the characteristic polynomial of the leading r x r submatrix, highest degree first
    std::vector<TPoly> chi{TPoly::constant(1, p)};
    for (std::size_t r = 0; r < n; ++r) {
        // first column of the Toeplitz factor: 1, -a, -R C, -R A C, ..., -R A^(r-1) C
        std::vector<TPoly> s;
        s.reserve(r + 2);
        s.push_back(TPoly::constant(1, p));
        s.push_back(-m(r, r));
        TVec v(r, TPoly(p));
        for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
        for (std::size_t step = 0; step < r; ++step) {
            TPoly dot(p);
            for (std::size_t i = 0; i < r; ++i)
                if (!m(r, i).is_zero() && !v[i].is_zero()) dot += m(r, i) * v[i];
            s.push_back(-dot);
            if (step + 1 == r) break;
            TVec next(r, TPoly(p));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t l = 0; l < r; ++l)
                    if (!m(i, l).is_zero() && !v[l].is_zero()) next[i] += m(i, l) * v[l];
            v = std::move(next);
        }
        std::vector<TPoly> out(r + 2, TPoly(p));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                if (!s[i - j].is_zero() && !chi[j].is_zero()) out[i] += s[i - j] * chi[j];
        chi = std::move(out);
    }
    std::vector<TPoly> asc(chi.rbegin(), chi.rend());
    return XPoly(std::move(asc), p);
}

inline XPoly char_poly(const UtBlock& b) { return char_poly(b.entries); }

namespace detail {

inline XPoly cofactor_det(const std::vector<std::vector<XPoly>>& a, std::vector<std::size_t>& cols, std::size_t row, std::uint32_t p) {
    if (row == a.size()) return XPoly::constant(TPoly::constant(1, p));
    XPoly acc(p);
    bool negative = false;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        const std::size_t c = cols[i];
        if (!a[row][c].is_zero()) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
            XPoly term = a[row][c] * cofactor_det(a, cols, row + 1, p);
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), c);
            acc += negative ? -term : term;
        }
        negative = !negative;
    }
    return acc;
}

}  // namespace detail

/// det(X*I - M) by Laplace expansion along rows over F_p[t][X]. Independent check of char_poly,
/// limited to dimension 8.
inline XPoly char_poly_oracle(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly_oracle: matrix must be square");
    if (m.rows() > 8) throw std::invalid_argument("char_poly_oracle: dimension above 8");
    const std::uint32_t p = m.modulus();
    const std::size_t n = m.rows();
    std::vector<std::vector<XPoly>> a(n, std::vector<XPoly>(n, XPoly(p)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = XPoly::constant(-m(i, j));
            if (i == j) a[i][j] += XPoly::x_power(1, p);
        }
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return detail::cofactor_det(a, cols, 0, p);
}

inline XPoly char_poly_oracle(const UtBlock& b) { return char_poly_oracle(b.entries); }

/// Monic generator of {f : f(M) v = 0} over F_p(t), via fraction-free elimination on the Krylov sequence
/// v, Mv, M^2 v, ...
inline XPoly vector_annihilator(const PolyMatrix& m, const TVec& v) {
    const std::uint32_t p = m.modulus();
    const std::size_t n = m.rows();
    struct Pivot {
        TVec vec;
        std::vector<TPoly> comb;
        std::size_t col;
    };
    std::vector<Pivot> pivots;
    TVec w = v;
    std::vector<TPoly> comb{TPoly::constant(1, p)};
    for (std::size_t step = 0; step <= n; ++step) {
        comb.resize(step + 1, TPoly(p));
        for (const auto& pv : pivots) {
            if (w[pv.col].is_zero()) continue;
            TPoly g = TPoly::gcd(pv.vec[pv.col], w[pv.col]);
            TPoly a = TPoly::exact_div(pv.vec[pv.col], g), b = TPoly::exact_div(w[pv.col], g);
            const bool unit = a.is_one();
            for (std::size_t i = 0; i < n; ++i) {
                if (!unit) w[i] *= a;
                if (!pv.vec[i].is_zero()) w[i] -= b * pv.vec[i];
            }
            for (std::size_t i = 0; i < comb.size(); ++i) {
                if (!unit) comb[i] *= a;
                if (i < pv.comb.size() && !pv.comb[i].is_zero()) comb[i] -= b * pv.comb[i];
            }
        }
        // joint content of (w, comb)
        TPoly g(p);
        for (const auto& x : w) g = TPoly::gcd(g, x);
        for (const auto& x : comb) g = TPoly::gcd(g, x);
        if (!g.is_zero() && !g.is_one()) {
            for (auto& x : w) x = TPoly::exact_div(x, g);
            for (auto& x : comb) x = TPoly::exact_div(x, g);
        }
        std::size_t col = 0;
        while (col < n && w[col].is_zero()) ++col;
        if (col == n) return XPoly(comb, p).primitive_part();
        pivots.push_back({w, comb, col});
        w = m.apply(w);
        comb.insert(comb.begin(), TPoly(p));
    }
    throw std::logic_error("vector_annihilator: Krylov sequence did not become dependent");
}

namespace detail {

/// Minimal polynomial over F_p(t) by exact Krylov runs. With acc the minimal polynomial on an invariant
/// subspace W and h the annihilator of acc(M) v, acc * h is the minimal polynomial on W + F_p(t)[M] v.
inline XPoly min_poly_krylov(const PolyMatrix& m) {
    const std::uint32_t p = m.modulus();
    const std::size_t n = m.rows();
    XPoly acc = XPoly::constant(TPoly::constant(1, p));
    for (std::size_t s = 0; s < n && acc.degree() < static_cast<int>(n); ++s) {
        TVec e(n, TPoly(p));
        e[s] = TPoly::constant(1, p);
        TVec w = evaluate_on(acc, m, e);
        if (std::all_of(w.begin(), w.end(), [](const TPoly& x) { return x.is_zero(); })) continue;
        acc = acc * vector_annihilator(m, w);
    }
    return acc;
}

/// Annihilator of a pseudo-random vector over F_p[t]/(ell), ascending and monic. Generically this is the
/// minimal polynomial of M mod ell.
inline std::vector<TPoly> local_min_poly(const PolyMatrix& m, const TPoly& ell, std::mt19937_64& rng) {
    const std::size_t n = m.rows();
    const std::uint32_t p = m.modulus();
    std::vector<TPoly> red(n * n, TPoly(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) red[i * n + j] = m(i, j) % ell;
    auto apply = [&](const TVec& v) {
        TVec out(n, TPoly(p));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!red[i * n + j].is_zero() && !v[j].is_zero()) out[i] += red[i * n + j] * v[j];
        for (auto& x : out) x = x % ell;
        return out;
    };
    std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
    TVec w(n, TPoly(p));
    for (auto& x : w) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(ell.degree()));
        for (auto& d : c) d = digit(rng);
        x = TPoly(std::move(c), p);
    }
    struct Pivot {
        TVec vec;  // vec[col] = 1
        std::vector<TPoly> comb;
        std::size_t col;
    };
    std::vector<Pivot> pivots;
    std::vector<TPoly> comb{TPoly::constant(1, p)};
    for (std::size_t step = 0; step <= n; ++step) {
        comb.resize(step + 1, TPoly(p));
        for (const auto& pv : pivots) {
            const TPoly c = w[pv.col];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                if (!pv.vec[i].is_zero()) w[i] = (w[i] - c * pv.vec[i]) % ell;
            for (std::size_t i = 0; i < pv.comb.size(); ++i)
                if (!pv.comb[i].is_zero()) comb[i] = (comb[i] - c * pv.comb[i]) % ell;
        }
        std::size_t col = 0;
        while (col < n && w[col].is_zero()) ++col;
        if (col == n) return comb;
        const TPoly inv = inverse_mod(w[col], ell);
        Pivot pv{w, comb, col};
        for (auto& x : pv.vec) x = (x * inv) % ell;
        for (auto& x : pv.comb) x = (x * inv) % ell;
        pivots.push_back(std::move(pv));
        w = apply(w);
        comb.insert(comb.begin(), TPoly(p));
    }
    throw std::logic_error("local_min_poly: Krylov sequence did not become dependent");
}

/// Chinese remaindering of polynomial residues: the unique x with deg x < sum deg ell_i and x = r_i mod ell_i.
inline TPoly crt(const std::vector<TPoly>& residues, const std::vector<TPoly>& ells) {
    const std::uint32_t p = ells.front().modulus();
    TPoly x(p), prod = TPoly::constant(1, p);
    for (std::size_t i = 0; i < ells.size(); ++i) {
        const TPoly diff = (residues[i] - x % ells[i]) % ells[i];
        if (!diff.is_zero()) x += prod * ((diff * inverse_mod(prod % ells[i], ells[i])) % ells[i]);
        prod *= ells[i];
    }
    return x;
}

/// Multimodular minimal polynomial: local minimal polynomials over F_p[t]/(ell) for irreducible ell, combined by
/// Chinese remaindering under the bound deg c_i <= (d - i) D (D the largest entry degree, which bounds every
/// eigenvalue at infinity). Residues of less than the maximal degree come from unlucky ell and are dropped.
/// The candidate is accepted only if it annihilates M exactly; it then equals the minimal polynomial, since
/// every local minimal polynomial divides the reduction of the true one.
inline std::optional<XPoly> min_poly_multimodular(const PolyMatrix& m) {
    const std::uint32_t p = m.modulus();
    const std::size_t n = m.rows();
    int entry_deg = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entry_deg = std::max(entry_deg, m(i, j).degree());
    IrreducibleSequence seq(p, IrreducibleSequence::default_degree(p));
    std::mt19937_64 rng(0x5eedu + n);
    std::vector<TPoly> ells;
    std::vector<std::vector<TPoly>> locals;
    std::size_t best = 0, covered = 0;
    for (int budget = 0; budget < 4096; ++budget) {
        TPoly ell = seq.next();
        auto local = local_min_poly(m, ell, rng);
        const std::size_t d = local.size() - 1;
        if (d < best) continue;
        if (d > best) {
            best = d;
            ells.clear();
            locals.clear();
            covered = 0;
        }
        covered += static_cast<std::size_t>(ell.degree());
        ells.push_back(std::move(ell));
        locals.push_back(std::move(local));
        if (covered > best * static_cast<std::size_t>(entry_deg)) break;
    }
    if (covered <= best * static_cast<std::size_t>(entry_deg)) return std::nullopt;
    std::vector<TPoly> coeffs(best + 1, TPoly(p));
    std::vector<TPoly> residues(ells.size(), TPoly(p));
    for (std::size_t i = 0; i < best; ++i) {
        for (std::size_t r = 0; r < ells.size(); ++r) residues[r] = locals[r][i];
        coeffs[i] = crt(residues, ells);
    }
    coeffs[best] = TPoly::constant(1, p);
    XPoly cand(std::move(coeffs), p);
    if (!evaluate(cand, m).is_zero()) return std::nullopt;
    return cand;
}

}  // namespace detail

/// Minimal polynomial over F_p(t), monic with coefficients in F_p[t] (matrices over F_p[t] have integral
/// minimal polynomials). Multimodular with an exact certificate, falling back to exact Krylov runs.
inline XPoly min_poly(const PolyMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("min_poly: matrix must be square");
    if (m.rows() == 0) return XPoly::constant(TPoly::constant(1, m.modulus()));
    if (auto r = detail::min_poly_multimodular(m)) return *r;
    return detail::min_poly_krylov(m);
}

inline XPoly min_poly(const UtBlock& b) { return min_poly(b.entries); }

enum class WitnessKind { separable_min_poly, repeated_or_inseparable };

/// Diagonalizability over the algebraic closure, certified by gcd(m, m') where m is the minimal polynomial.
struct Verdict {
    bool diagonalizable = true;
    XPoly char_poly;
    XPoly min_poly;
    WitnessKind witness = WitnessKind::separable_min_poly;
    XPoly witness_gcd;  // gcd(min_poly, d/dX min_poly)

    std::string describe() const {
        if (witness == WitnessKind::separable_min_poly) return "separable_min_poly";
        return "repeated_or_inseparable: gcd = " + witness_gcd.to_string();
    }
};

inline Verdict diagonalizability_verdict(const PolyMatrix& m) {
    Verdict v;
    v.char_poly = char_poly(m);
    v.min_poly = min_poly(m);
    v.witness_gcd = gcd_over_fraction_field(v.min_poly, v.min_poly.derivative());
    v.diagonalizable = v.witness_gcd.degree() == 0;
    v.witness = v.diagonalizable ? WitnessKind::separable_min_poly : WitnessKind::repeated_or_inseparable;
    return v;
}

inline Verdict diagonalizability_verdict(const UtBlock& b) { return diagonalizability_verdict(b.entries); }

/// Eigenvalue and eigenvector, coordinates in the block's basis order.
struct EigenPair {
    TPoly eigenvalue;
    TVec eigenvector;
};

/// True iff every pair satisfies M v = lambda v with v != 0, and, when there are as many pairs as the
/// dimension, the eigenvectors are linearly independent over F_p(t).
inline bool verify_eigenpairs(const PolyMatrix& m, const std::vector<EigenPair>& pairs) {
    const std::size_t n = m.rows();
    for (const auto& pr : pairs) {
        if (pr.eigenvector.size() != n) throw std::invalid_argument("verify_eigenpairs: eigenvector length does not match block");
        bool zero = true;
        for (const auto& x : pr.eigenvector) zero = zero && x.is_zero();
        if (zero) return false;
        TVec image = m.apply(pr.eigenvector);
        for (std::size_t i = 0; i < n; ++i)
            if (image[i] != pr.eigenvalue * pr.eigenvector[i]) return false;
    }
    if (pairs.size() == n) {
        PolyMatrix vecs(n, n, m.modulus());
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) vecs(i, j) = pairs[j].eigenvector[i];
        if (vecs.rank() != n) return false;
    }
    return true;
}

inline bool verify_eigenpairs(const UtBlock& b, const std::vector<EigenPair>& pairs) { return verify_eigenpairs(b.entries, pairs); }

}  // namespace drinfeld

#endif  // DRINFELD_SPECTRAL_HPP
