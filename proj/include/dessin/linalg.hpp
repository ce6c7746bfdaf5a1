#pragma once

#include <functional>
#include <vector>

#include "dessin/rational.hpp"

namespace dessin {

using QMatrix = std::vector<std::vector<Rational>>;

// Fraction-free (Bareiss) elimination over the integers after clearing
// denominators row by row.  Deterministic: pivots are chosen as the first
// nonzero entry scanning columns left to right, rows top to bottom.
int rank_exact(QMatrix a);

// Basis of { v : A v = 0 }.  Each vector is integer, primitive (content 1),
// with its first nonzero entry positive; one vector per free column, ordered
// by free column index.
std::vector<std::vector<Rational>> nullspace_exact(QMatrix a);

// Solve A x = b exactly; empty result if the system is inconsistent.
// A must have full column rank (used for small square solves).
std::vector<Rational> solve_exact(QMatrix a, std::vector<Rational> b);

// Bareiss determinant over any integral domain with exact division.
template <class R>
R det_bareiss(std::vector<std::vector<R>> m,
              const std::function<R(const R&, const R&)>& exact_div) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return R(1);
    R prev = R(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == R(0)) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!(m[i][k] == R(0))) {
                    piv = i;
                    break;
                }
            if (piv < 0) return R(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j],
                                    prev);
        prev = m[k][k];
    }
    R d = m[n - 1][n - 1];
    return sign < 0 ? R(0) - d : d;
}

}  // namespace dessin
