#pragma once

#include <optional>
#include <string>

#include "dessin/poly.hpp"
#include "dessin/series.hpp"

namespace dessin {

// sum q[k](x) d^k/dx^k with exact rational coefficients
struct LinDiffOp {
    std::vector<ExactPoly> q;
    int order() const { return static_cast<int>(q.size()) - 1; }
    const ExactPoly& coeff(int k) const { return q[static_cast<std::size_t>(k)]; }
    friend bool operator==(const LinDiffOp&, const LinDiffOp&) = default;
};

// Canonical form: top coefficient nonzero, the common polynomial factor of
// all coefficients removed, integer coefficients with content 1, and the
// leading coefficient's leading term positive.  Throws on the zero operator.
LinDiffOp normalize_operator(std::vector<ExactPoly> q);

// equal up to a nonzero scalar and a common polynomial factor
bool proportional(const LinDiffOp& a, const LinDiffOp& b);

// reduced num/den, den monic
struct RatFun {
    ExactPoly num, den;
    friend bool operator==(const RatFun&, const RatFun&) = default;
};

// r_1 = 1/p', r_{k+1} = r_k'/p': the k-th derivative of any local inverse of
// p, expressed in the fibre coordinate.  Returns r_1..r_count.
std::vector<RatFun> inverse_derivative_rationals(const ExactPoly& p, int count);

// Minimal-order, then minimal-degree operator annihilating every local
// inverse germ of p, found by exact nullspace escalation over (order, degree)
// and content-normalized.  Degree bound defaults to 2*deg(p).
LinDiffOp fuchsian_annihilator(const ExactPoly& p, int max_coeff_degree = -1);

int minimal_order(const ExactPoly& p, int max_coeff_degree = -1);

struct FuchsianReport {
    bool fuchsian = true;
    std::vector<std::string> notes;
};

// Fuchs criterion: at each root of the top coefficient with multiplicity m
// the coefficient of y^(K-i) must vanish to order >= m-i, and at infinity
// deg q_{K-i} <= deg q_K - i.
FuchsianReport fuchsian_check(const LinDiffOp& op);

// Conjugation by affine maps: psi rewrites the germ's argument (q_k(x) ->
// psi_scale^k q_k((x - psi_shift)/psi_scale)), an outer scale is a no-op on
// the solution space, and an outer shift is only representable when the
// order-zero coefficient vanishes (otherwise std::invalid_argument).
LinDiffOp pullback_affine(const LinDiffOp& op, const Rational& phi_scale,
                          const Rational& phi_shift, const Rational& psi_scale,
                          const Rational& psi_shift);

// ---------- operator application to truncated series ----------

template <class C>
std::vector<C> poly_to_c(const ExactPoly& p) {
    std::vector<C> out;
    for (const auto& c : p.c) out.push_back(cfrom_rational<C>(c));
    return out;
}

template <class C>
Series<C> apply_operator(const LinDiffOp& op, const Series<C>& y) {
    const int k = op.order();
    if (y.length() <= k)
        throw DomainError("series truncation shorter than the operator order");
    const int len = y.length() - k;
    Series<C> acc;
    acc.x0 = y.x0;
    acc.a.assign(static_cast<std::size_t>(len), C(0));
    Series<C> dk = y;  // k-th derivative, built incrementally
    for (int i = 0; i <= k; ++i) {
        if (!op.coeff(i).is_zero()) {
            Series<C> qi = poly_series(poly_to_c<C>(op.coeff(i)), y.x0, len);
            acc = series_add(acc, series_mul(qi, dk, len));
        }
        if (i < k) dk = series_derivative(dk);
    }
    return acc;
}

// ---------- numeric annihilator of a span of germs ----------

template <class C>
struct WronskianResult {
    int order = 0;
    // monic form y^(order) + sum_i coeff[i] y^(i): the series coefficients
    std::vector<Series<C>> monic_coeffs;
    // reconstruction as an exact operator when Pade + rationalization worked
    std::optional<LinDiffOp> exact;
};

namespace detail {

template <class R>
struct real_traits_of;
template <>
struct real_traits_of<double> {
    using type = NumTraits<C53>;
};
template <>
struct real_traits_of<F106> {
    using type = NumTraits<C106>;
};
template <>
struct real_traits_of<F212> {
    using type = NumTraits<C212>;
};

// continued fraction rational reconstruction; nullopt when no modest-height
// rational reproduces x within tol
template <class R>
std::optional<Rational> rationalize(R x, R tol) {
    using NT = typename real_traits_of<R>::type;
    using std::abs;
    using std::sqrt;
    // a continued fraction hits SOME convergent within tol once the
    // denominator reaches ~1/sqrt(tol); anything that tall is noise, not
    // structure
    const R hcap = sqrt(R(1) / tol) / R(100);
    Rational p0(0), q0(1), p1(1), q1(0);
    R rem = x;
    for (int it = 0; it < 64; ++it) {
        Integer a = NT::floor_integer(rem);
        Rational af(a);
        Rational pn = af * p1 + p0;
        Rational qn = af * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = pn;
        q1 = qn;
        if (NT::from_rational(qn) > hcap) return std::nullopt;
        Rational cand = pn / qn;
        R approx = NT::from_rational(cand);
        if (abs(approx - x) <= tol * (R(1) + abs(x))) return cand;
        R frac = rem - NT::from_rational(af);
        if (abs(frac) < tol) return std::nullopt;
        rem = R(1) / frac;
    }
    return std::nullopt;
}

}  // namespace detail

// Minimal monic operator annihilating the span of the germs (all around the
// same base point, same truncation).  The order is the numeric rank of the
// coefficient matrix at rank_tol (relative to the top singular value).  When
// base_exact identifies the (real rational) base point, the monic
// coefficients are run through Pade + continued fractions and the exact
// candidate is kept if it annihilates every germ to verify_tol.
template <class C>
WronskianResult<C> wronskian_annihilator(
    const std::vector<Series<C>>& germs,
    typename NumTraits<C>::Real rank_tol,
    std::optional<Rational> base_exact = std::nullopt,
    typename NumTraits<C>::Real verify_tol = typename NumTraits<C>::Real(1e-9)) {
    using R = typename NumTraits<C>::Real;
    if (germs.empty()) throw DomainError("no germs given");
    const int tlen = germs[0].length();
    for (const auto& g : germs) {
        if (g.length() != tlen) throw DomainError("germ truncations differ");
        if (cabs(g.x0 - germs[0].x0) != R(0))
            throw DomainError("germ base points differ");
    }

    // numeric rank of the span
    CMatrix<C> m;
    for (const auto& g : germs) m.push_back(g.a);
    const int r = numeric_rank(m, rank_tol);
    WronskianResult<C> out;
    out.order = r;
    if (r == 0) throw DomainError("all germs vanish at this truncation");
    if (tlen <= 2 * r)
        throw DomainError("increase truncation: too short for the detected order");

    // pick r germs that already span: greedy by rank
    std::vector<std::size_t> picked;
    CMatrix<C> have;
    for (std::size_t i = 0; i < germs.size() && static_cast<int>(picked.size()) < r; ++i) {
        have.push_back(germs[i].a);
        if (numeric_rank(have, rank_tol) == static_cast<int>(have.size()))
            picked.push_back(i);
        else
            have.pop_back();
    }
    if (static_cast<int>(picked.size()) < r)
        throw DomainError("could not select independent germs");

    // solve sum_i c_i g^(i) = -g^(r) for series c_i by elimination over the
    // series ring; pivots must be units (nonzero constant term)
    const int len = tlen - r;
    std::vector<std::vector<Series<C>>> w(picked.size());
    std::vector<Series<C>> rhs;
    for (std::size_t row = 0; row < picked.size(); ++row) {
        Series<C> d = germs[picked[row]];
        for (int i = 0; i < r; ++i) {
            Series<C> t = d;
            t.a.resize(static_cast<std::size_t>(len));
            w[row].push_back(std::move(t));
            d = series_derivative(d);
        }
        d.a.resize(static_cast<std::size_t>(len));
        rhs.push_back(series_scale(d, C(-1)));
    }

    const int nn = r;
    std::vector<int> rowperm(static_cast<std::size_t>(nn));
    for (int i = 0; i < nn; ++i) rowperm[static_cast<std::size_t>(i)] = i;
    for (int col = 0; col < nn; ++col) {
        int best = -1;
        R bestmag(0);
        for (int i = col; i < nn; ++i) {
            R mag = cabs(w[static_cast<std::size_t>(rowperm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(col)].coeff(0));
            if (mag > bestmag) {
                bestmag = mag;
                best = i;
            }
        }
        if (best < 0 || bestmag <= rank_tol)
            throw DomainError("wronskian is singular at the base point");
        std::swap(rowperm[static_cast<std::size_t>(col)], rowperm[static_cast<std::size_t>(best)]);
        const int prow = rowperm[static_cast<std::size_t>(col)];
        Series<C> inv = series_inverse(w[static_cast<std::size_t>(prow)][static_cast<std::size_t>(col)], len);
        for (int i = 0; i < nn; ++i) {
            const int irow = rowperm[static_cast<std::size_t>(i)];
            if (irow == prow) continue;
            Series<C> f = series_mul(w[static_cast<std::size_t>(irow)][static_cast<std::size_t>(col)], inv, len);
            if (cabs(f.coeff(0)) == R(0)) {
                bool allzero = true;
                for (const auto& v : f.a) allzero = allzero && cabs(v) == R(0);
                if (allzero) continue;
            }
            for (int j = col; j < nn; ++j)
                w[static_cast<std::size_t>(irow)][static_cast<std::size_t>(j)] = series_add(
                    w[static_cast<std::size_t>(irow)][static_cast<std::size_t>(j)],
                    series_scale(series_mul(f, w[static_cast<std::size_t>(prow)][static_cast<std::size_t>(j)], len), C(-1)));
            rhs[static_cast<std::size_t>(irow)] = series_add(
                rhs[static_cast<std::size_t>(irow)],
                series_scale(series_mul(f, rhs[static_cast<std::size_t>(prow)], len), C(-1)));
        }
    }
    out.monic_coeffs.assign(static_cast<std::size_t>(nn), Series<C>{});
    for (int col = 0; col < nn; ++col) {
        const int prow = rowperm[static_cast<std::size_t>(col)];
        out.monic_coeffs[static_cast<std::size_t>(col)] =
            series_div(rhs[static_cast<std::size_t>(prow)], w[static_cast<std::size_t>(prow)][static_cast<std::size_t>(col)], len);
    }

    // ---- Pade + rationalization ----
    if (!base_exact) return out;
    const int pl = 2 * r;  // fixed numerator degree bound
    std::vector<ExactPoly> nums, dens;
    // rationalization works at the precision's noise floor, not at the
    // looser series-reproduction tolerance: a low-degree Pade fit can sit
    // below verify_tol in absolute terms purely because the tail of a
    // far-pole series decays fast, and lifting such a fit manufactures
    // tall-denominator junk
    using std::sqrt;
    const R eps = NumTraits<C>::eps();
    const R lift_tol = sqrt(eps) * sqrt(sqrt(eps));
    auto lift = [&](const std::vector<C>& v) -> std::optional<ExactPoly> {
        ExactPoly p;
        for (std::size_t j = 0; j < v.size(); ++j) {
            using std::imag;
            using std::real;
            R re = real(v[j]), im = imag(v[j]);
            using std::abs;
            if (abs(im) > lift_tol * (R(1) + abs(re))) return std::nullopt;
            auto q = detail::rationalize<R>(re, lift_tol);
            if (!q) return std::nullopt;
            p.c.push_back(*q);
        }
        p.trim();
        return p;
    };
    bool ok = true;
    for (int i = 0; i < nn && ok; ++i) {
        const Series<C>& cser = out.monic_coeffs[static_cast<std::size_t>(i)];
        R scale(1);
        for (int j = 0; j < len; ++j) scale = std::max(scale, cabs(cser.coeff(j)));
        struct Cand {
            int md;
            R err;
            std::vector<C> num, den;
        };
        std::vector<Cand> cands;
        for (int md = 0; md <= 2 * r; ++md) {
            if (pl + md + 1 > len) break;
            // denominator 1 + b_1 u + ... + b_md u^md from the Toeplitz block
            std::vector<C> b(static_cast<std::size_t>(md), C(0));
            if (md > 0) {
                CMatrix<C> tm(static_cast<std::size_t>(md), std::vector<C>(static_cast<std::size_t>(md)));
                std::vector<C> trhs(static_cast<std::size_t>(md));
                for (int row = 0; row < md; ++row) {
                    for (int colj = 0; colj < md; ++colj)
                        tm[static_cast<std::size_t>(row)][static_cast<std::size_t>(colj)] =
                            cser.coeff(pl + 1 + row - 1 - colj);
                    trhs[static_cast<std::size_t>(row)] = -cser.coeff(pl + 1 + row);
                }
                auto sol = lu_solve(tm, trhs);
                if (!sol) continue;
                b = *sol;
            }
            std::vector<C> den{C(1)};
            for (const auto& v : b) den.push_back(v);
            // numerator = series * den, truncated
            Series<C> denser{cser.x0, den};
            denser.a.resize(static_cast<std::size_t>(len), C(0));
            Series<C> numser = series_mul(cser, denser, len);
            std::vector<C> num(numser.a.begin(), numser.a.begin() + pl + 1);
            // check: num/den reproduces the series
            Series<C> numfull{cser.x0, num};
            numfull.a.resize(static_cast<std::size_t>(len), C(0));
            Series<C> recon = series_div(numfull, denser, len);
            R err(0);
            for (int j = 0; j < len; ++j)
                err = std::max(err, cabs(recon.coeff(j) - cser.coeff(j)));
            if (err > verify_tol * scale) continue;
            cands.push_back(Cand{md, err, std::move(num), std::move(den)});
        }
        // the true structure reproduces the series down to the noise floor;
        // fits orders of magnitude above the best are coincidences of a
        // decaying tail, so only candidates at the floor are lifted, lowest
        // denominator degree first.  everything below eps-scale counts as a
        // floor hit: extra parameters keep "improving" a fit to pure noise
        bool found = false;
        if (!cands.empty()) {
            R emin = cands.front().err;
            for (const auto& cd : cands) emin = std::min(emin, cd.err);
            const R noise_floor = eps * R(1e3) * scale;
            for (const auto& cd : cands) {
                if (cd.err > std::max(emin * R(1e4), noise_floor)) continue;
                auto pn = lift(cd.num);
                auto pd = lift(cd.den);
                if (!pn || !pd) continue;
                nums.push_back(*pn);
                dens.push_back(*pd);
                found = true;
                break;
            }
        }
        if (!found) ok = false;
    }

    if (ok) {
        // clear denominators: q_i = num_i * (D / den_i), q_r = D
        ExactPoly d = ExactPoly::constant(rat(1));
        for (const auto& den : dens) {
            ExactPoly g = poly_gcd(d, den);
            d = d * (den / g);
        }
        std::vector<ExactPoly> q;
        for (int i = 0; i < nn; ++i)
            q.push_back(nums[static_cast<std::size_t>(i)] * (d / dens[static_cast<std::size_t>(i)]));
        q.push_back(d);
        // translate from u = x - x0 back to x
        for (auto& poly : q) poly = taylor_shift(poly, -*base_exact);
        try {
            LinDiffOp cand = normalize_operator(std::move(q));
            // must annihilate every germ
            R scale(0), worst(0);
            for (const auto& g : germs) {
                Series<C> res = apply_operator(cand, g);
                for (const auto& v : res.a) worst = std::max(worst, cabs(v));
                for (const auto& v : g.a) scale = std::max(scale, cabs(v));
            }
            R opmag(0);
            for (const auto& qq : cand.q)
                for (const auto& cv : poly_to_c<C>(qq)) opmag = std::max(opmag, cabs(cv));
            if (worst <= verify_tol * (R(1) + scale) * (R(1) + opmag))
                out.exact = std::move(cand);
        } catch (const DomainError&) {
        }
    }
    return out;
}

}  // namespace dessin
