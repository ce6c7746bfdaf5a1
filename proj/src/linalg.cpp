#include "dessin/linalg.hpp"

#include <cassert>

namespace dessin {

namespace {

using ZRow = std::vector<Integer>;

// Clear denominators; drops zero rows.
std::vector<ZRow> to_integer_rows(const QMatrix& a) {
    std::vector<ZRow> rows;
    for (const auto& r : a) {
        Integer l(1);
        bool nonzero = false;
        for (const auto& v : r) {
            if (v != 0) nonzero = true;
            l = int_lcm(l, v.get_den());
        }
        if (!nonzero) continue;
        ZRow zr(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) {
            Rational s = r[j] * l;
            assert(s.get_den() == 1);
            zr[j] = s.get_num();
        }
        rows.push_back(std::move(zr));
    }
    return rows;
}

struct Echelon {
    std::vector<ZRow> rows;      // first `pivots.size()` rows are the echelon
    std::vector<int> pivot_col;  // column of the i-th pivot row
    int cols = 0;
};

Echelon bareiss_echelon(const QMatrix& a) {
    Echelon e;
    e.cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    e.rows = to_integer_rows(a);
    const int m = static_cast<int>(e.rows.size());
    Integer prev(1);
    int rank = 0;
    for (int col = 0; col < e.cols && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (e.rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(e.rows[rank], e.rows[piv]);
        for (int i = rank + 1; i < m; ++i) {
            for (int j = col + 1; j < e.cols; ++j) {
                Integer t = e.rows[rank][col] * e.rows[i][j] -
                            e.rows[i][col] * e.rows[rank][j];
                mpz_divexact(e.rows[i][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            e.rows[i][col] = 0;
        }
        prev = e.rows[rank][col];
        e.pivot_col.push_back(col);
        ++rank;
    }
    return e;
}

void primitive_normalize(std::vector<Rational>& v) {
    Integer l(1);
    for (const auto& x : v) l = int_lcm(l, x.get_den());
    Integer g(0);
    for (auto& x : v) {
        x *= l;
        g = int_gcd(g, x.get_num());
    }
    if (g == 0) return;
    int lead_sign = 0;
    for (const auto& x : v)
        if (x != 0) {
            lead_sign = sgn(x);
            break;
        }
    Rational scale = rat(lead_sign < 0 ? -Integer(1) : Integer(1), g);
    for (auto& x : v) x *= scale;
}

}  // namespace

int rank_exact(QMatrix a) {
    return static_cast<int>(bareiss_echelon(a).pivot_col.size());
}

std::vector<std::vector<Rational>> nullspace_exact(QMatrix a) {
    Echelon e = bareiss_echelon(a);
    const int rank = static_cast<int>(e.pivot_col.size());
    const int cols = e.cols;
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (int i = rank - 1; i >= 0; --i) {
            const int pc = e.pivot_col[i];
            Rational acc(0);
            for (int j = pc + 1; j < cols; ++j)
                if (v[j] != 0) acc += Rational(e.rows[i][j]) * v[j];
            v[pc] = -acc / Rational(e.rows[i][pc]);
        }
        primitive_normalize(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> solve_exact(QMatrix a, std::vector<Rational> b) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    QMatrix aug = std::move(a);
    for (int i = 0; i < m; ++i) aug[i].push_back(b[i]);
    Echelon e = bareiss_echelon(aug);
    const int rank = static_cast<int>(e.pivot_col.size());
    // inconsistent iff a pivot lands in the appended column
    if (rank > 0 && e.pivot_col.back() == n) return {};
    std::vector<Rational> x(n, Rational(0));
    for (int i = rank - 1; i >= 0; --i) {
        const int pc = e.pivot_col[i];
        Rational acc = Rational(e.rows[i][n]);
        for (int j = pc + 1; j < n; ++j)
            if (x[j] != 0) acc -= Rational(e.rows[i][j]) * x[j];
        x[pc] = acc / Rational(e.rows[i][pc]);
    }
    return x;
}

}  // namespace dessin
