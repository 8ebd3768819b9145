// Reduced Burau representation and the Alexander polynomial of a braid
// closure.
//
// For a braid b on n strands whose closure is a knot,
//
//   Delta(t) = det(rho(b) - I_{n-1}) * (1 - t) / (1 - t^n),
//
// where rho is the reduced Burau representation over integer Laurent
// polynomials. The division is exact; the result is reported in normalized
// form. The determinant formula is invariant under the choice of Burau
// convention up to units, which normalization absorbs.

#pragma once

#include <cstdlib>
#include <vector>

#include "slopecalc/braid.hpp"
#include "slopecalc/errors.hpp"
#include "slopecalc/laurent.hpp"

namespace slopecalc {

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

inline LaurentMatrix laurent_identity(int m) {
    LaurentMatrix id(m, std::vector<LaurentPolynomial>(m));
    for (int i = 0; i < m; ++i) id[i][i] = LaurentPolynomial(1);
    return id;
}

inline LaurentMatrix laurent_multiply(const LaurentMatrix& a, const LaurentMatrix& b) {
    const int m = static_cast<int>(a.size());
    LaurentMatrix r(m, std::vector<LaurentPolynomial>(m));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < m; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
            }
        }
    return r;
}

/// Reduced Burau matrix of a single letter on n strands ((n-1) x (n-1)).
/// Only column |k|-1 differs from the identity.
inline LaurentMatrix reduced_burau_letter(int letter, int strands) {
    const int m = strands - 1;
    LaurentMatrix mat = laurent_identity(m);
    const int a = std::abs(letter) - 1;
    if (letter > 0) {
        if (a >= 1) mat[a - 1][a] = LaurentPolynomial::monomial(1, 1);
        mat[a][a] = LaurentPolynomial::monomial(-1, 1);
        if (a + 1 < m) mat[a + 1][a] = LaurentPolynomial(1);
    } else {
        if (a >= 1) mat[a - 1][a] = LaurentPolynomial(1);
        mat[a][a] = LaurentPolynomial::monomial(-1, -1);
        if (a + 1 < m) mat[a + 1][a] = LaurentPolynomial::monomial(1, -1);
    }
    return mat;
}

inline LaurentMatrix reduced_burau(const BraidWord& b) {
    LaurentMatrix mat = laurent_identity(b.strands - 1);
    for (int letter : b.letters) mat = laurent_multiply(mat, reduced_burau_letter(letter, b.strands));
    return mat;
}

/// Fraction-free (Bareiss) determinant; all intermediate divisions are exact
/// over the Laurent ring.
inline LaurentPolynomial laurent_determinant(LaurentMatrix m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPolynomial(1);
    LaurentPolynomial prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return {};
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
        prev = m[k][k];
    }
    LaurentPolynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/// Normalized Alexander polynomial of the braid closure.
inline LaurentPolynomial alexander_polynomial(const BraidWord& b) {
    require_knot_closure(b);
    if (b.strands == 1) return LaurentPolynomial(1);
    LaurentMatrix m = reduced_burau(b);
    for (int i = 0; i < b.strands - 1; ++i) m[i][i] = m[i][i] - LaurentPolynomial(1);
    const LaurentPolynomial det = laurent_determinant(std::move(m));
    if (det.is_zero()) throw internal_error("Burau determinant vanished on a knot closure");
    LaurentPolynomial cyclotomic_sum;  // (1 - t^n) / (1 - t)
    for (int j = 0; j < b.strands; ++j)
        cyclotomic_sum = cyclotomic_sum + LaurentPolynomial::monomial(1, j);
    const LaurentPolynomial delta = det.divide_exact(cyclotomic_sum).normalized();
    if (std::llabs(delta.evaluate_at_unit(1)) != 1)
        throw internal_error("Alexander polynomial failed the determinant check at t = 1");
    return delta;
}

}  // namespace slopecalc
