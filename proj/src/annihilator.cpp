#include "dessin/annihilator.hpp"

#include <utility>

#include "dessin/linalg.hpp"

namespace dessin {

LinDiffOp normalize_operator(std::vector<ExactPoly> q) {
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    if (q.empty()) throw DomainError("zero operator");
    ExactPoly g;
    for (const auto& p : q) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? monic(p) : poly_gcd(g, p);
    }
    if (g.degree() > 0)
        for (auto& p : q) p = p / g;
    Rational content(0);
    for (const auto& p : q)
        for (const auto& c : p.c) content = rat_gcd(content, c);
    for (auto& p : q) p = p.scaled(rat(1) / content);
    if (q.back().lc() < 0)
        for (auto& p : q) p = -p;
    return LinDiffOp{std::move(q)};
}

bool proportional(const LinDiffOp& a, const LinDiffOp& b) {
    auto all_zero = [](const LinDiffOp& op) {
        for (const auto& p : op.q)
            if (!p.is_zero()) return false;
        return true;
    };
    if (all_zero(a) || all_zero(b)) return all_zero(a) && all_zero(b);
    return normalize_operator(a.q).q == normalize_operator(b.q).q;
}

std::vector<RatFun> inverse_derivative_rationals(const ExactPoly& p, int count) {
    if (p.degree() < 1) throw DomainError("polynomial must be nonconstant");
    const ExactPoly dp = p.derivative();
    const ExactPoly ddp = dp.derivative();
    std::vector<RatFun> out;
    ExactPoly nk = ExactPoly::constant(rat(1));
    for (int k = 1; k <= count; ++k) {
        if (nk.is_zero()) {
            out.push_back(RatFun{ExactPoly{}, ExactPoly::constant(rat(1))});
        } else {
            ExactPoly den = dp.pow(2 * k - 1);
            ExactPoly g = poly_gcd(nk, den);
            ExactPoly num = nk / g;
            ExactPoly red = den / g;
            out.push_back(RatFun{num.scaled(rat(1) / red.lc()), monic(red)});
        }
        nk = nk.derivative() * dp - nk * ddp.scaled(rat(2 * k - 1));
    }
    return out;
}

// N_k and the cleared-denominator column polynomials: multiplying the
// annihilation identity by (p')^(2K-1) turns q_0 into t*(p')^(2K-1) and q_k
// into N_k*(p')^(2(K-k)), all polynomial in the fibre coordinate t.
LinDiffOp fuchsian_annihilator(const ExactPoly& p, int max_coeff_degree) {
    const int n = p.degree();
    if (n < 1) throw DomainError("polynomial must be nonconstant");
    const int dmax = max_coeff_degree >= 0 ? max_coeff_degree : 2 * n;
    const ExactPoly dp = p.derivative();
    const ExactPoly ddp = dp.derivative();

    std::vector<ExactPoly> ppow{ExactPoly::constant(rat(1))};
    for (int j = 1; j <= dmax; ++j) ppow.push_back(ppow.back() * p);
    std::vector<ExactPoly> dppow{ExactPoly::constant(rat(1))};
    for (int j = 1; j <= 2 * n - 1; ++j) dppow.push_back(dppow.back() * dp);
    std::vector<ExactPoly> nks;
    {
        ExactPoly nk = ExactPoly::constant(rat(1));
        for (int k = 1; k <= n; ++k) {
            nks.push_back(nk);
            nk = nk.derivative() * dp - nk * ddp.scaled(rat(2 * k - 1));
        }
    }

    for (int K = 1; K <= n; ++K) {
        std::vector<ExactPoly> mk(static_cast<std::size_t>(K) + 1);
        mk[0] = ExactPoly::x() * dppow[static_cast<std::size_t>(2 * K - 1)];
        for (int k = 1; k <= K; ++k)
            mk[static_cast<std::size_t>(k)] =
                nks[static_cast<std::size_t>(k - 1)] * dppow[static_cast<std::size_t>(2 * (K - k))];
        for (int d = 0; d <= dmax; ++d) {
            std::vector<ExactPoly> cols;
            cols.reserve(static_cast<std::size_t>((K + 1) * (d + 1)));
            int maxdeg = 0;
            for (int k = 0; k <= K; ++k)
                for (int j = 0; j <= d; ++j) {
                    cols.push_back(mk[static_cast<std::size_t>(k)] * ppow[static_cast<std::size_t>(j)]);
                    maxdeg = std::max(maxdeg, cols.back().degree());
                }
            QMatrix mat(static_cast<std::size_t>(maxdeg + 1),
                        std::vector<Rational>(cols.size(), Rational(0)));
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (int r = 0; r <= cols[c].degree(); ++r)
                    mat[static_cast<std::size_t>(r)][c] = cols[c].coeff(r);
            auto ns = nullspace_exact(mat);
            for (const auto& v : ns) {
                bool top = false;
                for (int j = 0; j <= d; ++j)
                    top = top || v[static_cast<std::size_t>(K * (d + 1) + j)] != 0;
                if (!top) continue;  // lower order would have been found earlier
                std::vector<ExactPoly> q;
                for (int k = 0; k <= K; ++k) {
                    ExactPoly qk;
                    qk.c.assign(static_cast<std::size_t>(d + 1), Rational(0));
                    for (int j = 0; j <= d; ++j)
                        qk.c[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(k * (d + 1) + j)];
                    qk.trim();
                    q.push_back(std::move(qk));
                }
                return normalize_operator(std::move(q));
            }
        }
    }
    throw DomainError("no annihilator found within the degree bound");
}

int minimal_order(const ExactPoly& p, int max_coeff_degree) {
    return fuchsian_annihilator(p, max_coeff_degree).order();
}

FuchsianReport fuchsian_check(const LinDiffOp& op) {
    FuchsianReport report;
    std::vector<ExactPoly> q = op.q;
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    if (q.empty()) {
        report.fuchsian = false;
        report.notes.push_back("zero operator");
        return report;
    }
    const int K = static_cast<int>(q.size()) - 1;
    if (K == 0) return report;

    auto sqf = squarefree_decomposition(monic(q.back()));
    for (int i = 1; i <= K; ++i) {
        const ExactPoly& qe = q[static_cast<std::size_t>(K - i)];
        ExactPoly gi = ExactPoly::constant(rat(1));
        for (const auto& [f, m] : sqf)
            if (m > i) gi = gi * f.pow(m - i);
        if (gi.degree() > 0 && !qe.is_zero() && !divides(gi, qe)) {
            report.fuchsian = false;
            report.notes.push_back("coefficient of the order-" + std::to_string(K - i) +
                                   " term does not vanish deeply enough at roots of " +
                                   poly_str(gi));
        }
        if (!qe.is_zero() && qe.degree() > q.back().degree() - i) {
            report.fuchsian = false;
            report.notes.push_back("coefficient of the order-" + std::to_string(K - i) +
                                   " term has too large a degree for a regular point at infinity");
        }
    }
    return report;
}

LinDiffOp pullback_affine(const LinDiffOp& op, const Rational& phi_scale,
                          const Rational& phi_shift, const Rational& psi_scale,
                          const Rational& psi_shift) {
    if (phi_scale == 0 || psi_scale == 0)
        throw DomainError("affine map must be invertible");
    // psi rewrites the argument; an invertible value scale phi_scale never
    // changes the solution span
    ExactPoly arg{-psi_shift / psi_scale, rat(1) / psi_scale};
    std::vector<ExactPoly> q;
    Rational s(1);
    for (const auto& qk : op.q) {
        q.push_back(qk.compose(arg).scaled(s));
        s *= psi_scale;
    }
    LinDiffOp out = normalize_operator(std::move(q));
    if (phi_shift != 0 && !out.q[0].is_zero())
        throw std::invalid_argument(
            "value shift needs a vanishing order-zero coefficient");
    return out;
}

}  // namespace dessin
