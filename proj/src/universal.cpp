#include "dessin/universal.hpp"

#include <map>
#include <utility>

#include "dessin/linalg.hpp"

namespace dessin {

SymbolicRational q_mk(int m, int k, int n) {
    if (m < 1 || k < 1 || k > n) throw DomainError("bad q_mk arguments");
    using PM = Poly<MPoly>;
    PM f = PM::constant(MPoly(1));
    for (int i = 1; i <= n; ++i) {
        if (i == k) continue;
        f = f * PM{-MPoly::var(i - 1), MPoly(1)};
    }
    // g/f^s represents the running derivative of f^{-m}
    PM g = PM::constant(MPoly(1));
    PM fd = f.derivative();
    int s = m;
    for (int step = 0; step + 1 < m; ++step) {
        g = g.derivative() * f - (g * fd).scaled(MPoly(s));
        ++s;
    }
    MPoly tk = MPoly::var(k - 1);
    MPoly num = g(tk);
    SymbolicRational out;
    out.den = MPoly(1);
    for (int i = 1; i <= n; ++i) {
        if (i == k) continue;
        MPoly fac = tk - MPoly::var(i - 1);
        int e = 2 * m - 1;
        MPoly quo;
        while (e > 0 && !num.is_zero() && exact_divide(num, fac, quo)) {
            num = std::move(quo);
            --e;
        }
        for (int rep = 0; rep < e; ++rep) out.den = out.den * fac;
    }
    out.num = std::move(num);
    return out;
}

namespace {

// exponent vectors with sum_i w[i]*e[i] == target, lexicographic order
void weighted_monomials(const std::vector<int>& w, std::size_t pos, int target,
                        Exps& cur, std::vector<Exps>& out) {
    if (pos == w.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    for (int e = 0; e * w[pos] <= target; ++e) {
        cur[pos] = e;
        weighted_monomials(w, pos + 1, target - e * w[pos], cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

UniversalOperator universal_annihilator(int n) {
    if (n < 2 || n > 5) throw DomainError("unsupported degree");

    // assembly space: var 0 = t, vars 1..n-1 = a_1..a_{n-1}
    MPoly dp = MPoly::monomial(Exps{n - 1}, rat(n));
    MPoly ddp = MPoly::monomial(Exps{n - 2}, rat(n * (n - 1)));
    MPoly ahat = -MPoly::monomial(Exps{n}, rat(1));  // a_0 on the root locus
    for (int i = 1; i <= n - 1; ++i) {
        Exps e(static_cast<std::size_t>(i) + 1, 0);
        e[0] = i - 1;
        e[static_cast<std::size_t>(i)] = 1;
        dp = dp + MPoly::monomial(e, rat(i));
        if (i >= 2) {
            Exps e2 = e;
            e2[0] = i - 2;
            ddp = ddp + MPoly::monomial(e2, rat(i * (i - 1)));
        }
        Exps ea = e;
        ea[0] = i;
        ahat = ahat - MPoly::monomial(ea, rat(1));
    }

    // signed derivative numerators: root as a function of a_0
    std::vector<MPoly> nks;
    {
        MPoly nk = MPoly(-1);
        for (int k = 1; k <= n; ++k) {
            nks.push_back(nk);
            nk = nk * ddp.scaled(rat(2 * k - 1)) - nk.derivative(0) * dp;
        }
    }
    std::vector<MPoly> dppow{MPoly(1)};
    for (int j = 1; j <= 2 * (n - 1); ++j) dppow.push_back(dppow.back() * dp);
    std::vector<MPoly> ahatpow{MPoly(1)};

    std::vector<int> weights(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) weights[static_cast<std::size_t>(i)] = n - i;

    std::map<std::pair<int, int>, MPoly> vcache;  // (k, e0) -> ahat^e0 * V_k

    for (int delta = -n * n; delta <= 2 * n * n; ++delta) {
        std::vector<std::pair<int, Exps>> unknowns;
        std::vector<bool> istop;
        for (int k = 1; k <= n; ++k) {
            int wdeg = n * k + delta;
            if (wdeg < 0) continue;
            std::vector<Exps> mons;
            Exps cur(static_cast<std::size_t>(n), 0);
            weighted_monomials(weights, 0, wdeg, cur, mons);
            for (auto& e : mons) {
                unknowns.emplace_back(k, e);
                istop.push_back(k == n);
            }
        }
        if (unknowns.empty()) continue;

        std::map<Exps, int, GrlexLess> rowindex;
        std::vector<MPoly> colpolys;
        colpolys.reserve(unknowns.size());
        for (const auto& [k, e] : unknowns) {
            while (static_cast<int>(ahatpow.size()) <= e[0])
                ahatpow.push_back(ahatpow.back() * ahat);
            auto key = std::make_pair(k, e[0]);
            auto it = vcache.find(key);
            if (it == vcache.end())
                it = vcache
                         .emplace(key, ahatpow[static_cast<std::size_t>(e[0])] *
                                           nks[static_cast<std::size_t>(k - 1)] *
                                           dppow[static_cast<std::size_t>(2 * (n - k))])
                         .first;
            Exps shift(static_cast<std::size_t>(n), 0);
            for (int i = 1; i < n; ++i) shift[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
            MPoly col = it->second * MPoly::monomial(shift, rat(1));
            for (const auto& term : col.terms)
                rowindex.try_emplace(term.first, static_cast<int>(rowindex.size()));
            colpolys.push_back(std::move(col));
        }

        QMatrix mat(rowindex.size(), std::vector<Rational>(colpolys.size(), Rational(0)));
        for (std::size_t c = 0; c < colpolys.size(); ++c)
            for (const auto& [me, mc] : colpolys[c].terms)
                mat[static_cast<std::size_t>(rowindex.at(me))][c] = mc;

        auto ns = nullspace_exact(mat);
        for (const auto& v : ns) {
            bool top = false;
            for (std::size_t i = 0; i < v.size(); ++i)
                top = top || (istop[i] && v[i] != 0);
            if (!top) continue;
            std::vector<MPoly> coeffs(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0)
                    coeffs[static_cast<std::size_t>(unknowns[i].first - 1)].add_term(
                        unknowns[i].second, v[i]);
            if (grevlex_leading(coeffs.back()).second < 0)
                for (auto& p : coeffs) p = -p;
            return UniversalOperator{n, std::move(coeffs)};
        }
    }
    throw DomainError("universal operator construction failed");
}

LinDiffOp specialize(const UniversalOperator& d, const ExactPoly& p) {
    if (p.degree() != d.n || p.lc() != 1)
        throw DomainError("specialization needs a monic polynomial of matching degree");
    int maxe0 = 0;
    for (const auto& pk : d.coeffs)
        for (const auto& [e, c] : pk.terms)
            if (!e.empty()) maxe0 = std::max(maxe0, e[0]);
    ExactPoly base{p.coeff(0), -1};  // a_0 -> c_0 - x
    std::vector<ExactPoly> basepow{ExactPoly::constant(rat(1))};
    for (int j = 1; j <= maxe0; ++j) basepow.push_back(basepow.back() * base);

    std::vector<ExactPoly> q{ExactPoly{}};
    for (int k = 1; k <= d.n; ++k) {
        ExactPoly qk;
        for (const auto& [e, c] : d.coeffs[static_cast<std::size_t>(k - 1)].terms) {
            Rational scalar = c;
            for (std::size_t i = 1; i < e.size(); ++i)
                for (int rep = 0; rep < e[i]; ++rep)
                    scalar *= p.coeff(static_cast<int>(i));
            int e0 = e.empty() ? 0 : e[0];
            if (scalar != 0)
                qk = qk + basepow[static_cast<std::size_t>(e0)].scaled(scalar);
        }
        if (k % 2 == 1) qk = -qk;  // d/da_0 = -d/dx
        q.push_back(std::move(qk));
    }
    return LinDiffOp{std::move(q)};
}

MPoly generic_discriminant(int n) {
    if (n < 1) throw DomainError("degree must be positive");
    // descending coefficients of p and p'
    std::vector<MPoly> pd{MPoly(1)}, pdd{MPoly(n)};
    for (int i = n - 1; i >= 0; --i) pd.push_back(MPoly::var(i));
    for (int i = n - 1; i >= 1; --i) pdd.push_back(MPoly::var(i).scaled(rat(i)));

    const int size = 2 * n - 1;
    std::vector<std::vector<MPoly>> syl(
        static_cast<std::size_t>(size),
        std::vector<MPoly>(static_cast<std::size_t>(size), MPoly()));
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j <= n; ++j)
            syl[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                pd[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n - 1; ++j)
            syl[static_cast<std::size_t>(n - 1 + i)][static_cast<std::size_t>(i + j)] =
                pdd[static_cast<std::size_t>(j)];

    std::function<MPoly(const MPoly&, const MPoly&)> div =
        [](const MPoly& a, const MPoly& b) {
            MPoly quo;
            if (!exact_divide(a, b, quo))
                throw DomainError("nonexact division in determinant");
            return quo;
        };
    MPoly res = det_bareiss<MPoly>(syl, div);
    return (n * (n - 1) / 2) % 2 == 1 ? -res : res;
}

LeadingFactorization leading_coeff_factorization(const UniversalOperator& d) {
    MPoly disc = generic_discriminant(d.n);
    MPoly cof;
    if (!exact_divide(d.coeffs.back(), disc, cof))
        throw DomainError("leading coefficient is not divisible by the discriminant");
    if (!cof.is_zero() && grevlex_leading(cof).second < 0)
        return LeadingFactorization{-disc, -cof};
    return LeadingFactorization{disc, cof};
}

}  // namespace dessin
