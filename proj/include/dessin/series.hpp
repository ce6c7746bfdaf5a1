#pragma once

#include "dessin/numeric.hpp"

namespace dessin {

// Truncated power series around x0: sum a[j] (x - x0)^j.  The truncation
// order is a.size()-1 (the highest retained power).
template <class C>
struct Series {
    C x0{};
    std::vector<C> a;

    int length() const { return static_cast<int>(a.size()); }
    int truncation_order() const { return length() - 1; }
    C coeff(int j) const {
        if (j < 0 || j >= length()) return C(0);
        return a[static_cast<std::size_t>(j)];
    }
};

template <class C>
Series<C> series_from_coeffs(C x0, std::vector<C> coeffs) {
    return Series<C>{x0, std::move(coeffs)};
}

template <class C>
Series<C> series_add(const Series<C>& s, const Series<C>& t) {
    Series<C> r;
    r.x0 = s.x0;
    r.a.assign(static_cast<std::size_t>(std::min(s.length(), t.length())), C(0));
    for (int i = 0; i < r.length(); ++i)
        r.a[static_cast<std::size_t>(i)] = s.coeff(i) + t.coeff(i);
    return r;
}

template <class C>
Series<C> series_scale(const Series<C>& s, const C& f) {
    Series<C> r = s;
    for (auto& v : r.a) v *= f;
    return r;
}

template <class C>
Series<C> series_mul(const Series<C>& s, const Series<C>& t, int len = -1) {
    if (len < 0) len = std::min(s.length(), t.length());
    Series<C> r;
    r.x0 = s.x0;
    r.a.assign(static_cast<std::size_t>(len), C(0));
    for (int i = 0; i < std::min(s.length(), len); ++i) {
        if (s.coeff(i) == C(0)) continue;
        for (int j = 0; j < std::min(t.length(), len - i); ++j)
            r.a[static_cast<std::size_t>(i + j)] += s.coeff(i) * t.coeff(j);
    }
    return r;
}

// d/dx; one term shorter
template <class C>
Series<C> series_derivative(const Series<C>& s) {
    Series<C> r;
    r.x0 = s.x0;
    for (int j = 1; j < s.length(); ++j) r.a.push_back(s.coeff(j) * C(j));
    return r;
}

// reciprocal, requires a nonzero constant term
template <class C>
Series<C> series_inverse(const Series<C>& s, int len = -1) {
    using R = typename NumTraits<C>::Real;
    if (len < 0) len = s.length();
    if (s.length() == 0 || cabs(s.coeff(0)) == R(0))
        throw DomainError("series inverse of a zero constant term");
    Series<C> r;
    r.x0 = s.x0;
    r.a.assign(static_cast<std::size_t>(len), C(0));
    r.a[0] = C(1) / s.coeff(0);
    for (int k = 1; k < len; ++k) {
        C acc(0);
        for (int j = 1; j <= k; ++j) acc += s.coeff(j) * r.a[static_cast<std::size_t>(k - j)];
        r.a[static_cast<std::size_t>(k)] = -acc / s.coeff(0);
    }
    return r;
}

template <class C>
Series<C> series_div(const Series<C>& s, const Series<C>& t, int len = -1) {
    if (len < 0) len = std::min(s.length(), t.length());
    return series_mul(s, series_inverse(t, len), len);
}

// evaluate a polynomial (lowest-first coefficients) on a series argument
template <class C>
Series<C> poly_on_series(const std::vector<C>& p, const Series<C>& s) {
    Series<C> acc;
    acc.x0 = s.x0;
    acc.a.assign(static_cast<std::size_t>(s.length()), C(0));
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = series_mul(acc, s, s.length());
        acc.a[0] += *it;
    }
    return acc;
}

// expansion of the polynomial around x0 truncated to len terms
template <class C>
Series<C> poly_series(const std::vector<C>& p, const C& x0, int len) {
    Series<C> id;  // x = x0 + u
    id.x0 = x0;
    id.a.assign(static_cast<std::size_t>(len), C(0));
    if (len > 0) id.a[0] = x0;
    if (len > 1) id.a[1] = C(1);
    return poly_on_series(p, id);
}

// All local inverse branches of the polynomial map P at the regular value x0:
// series y_i with P(y_i(u)) = x0 + u, one per root of P - x0.  The number of
// coefficients returned is terms.  Throws DomainError when x0 is a critical
// value at the working tolerance.
template <class C>
std::vector<Series<C>> power_series_inverses(
    const std::vector<C>& p, const C& x0, int terms,
    typename NumTraits<C>::Real tol = NumTraits<C>::default_tol()) {
    using R = typename NumTraits<C>::Real;
    using std::sqrt;
    if (p.size() <= 1) throw DomainError("constant polynomial has no inverses");
    if (terms < 1) throw DomainError("need at least one series term");

    std::vector<C> shifted = p;
    shifted[0] -= x0;
    std::vector<C> roots = roots_durand_kerner(shifted, 500, tol);
    std::vector<C> dp = poly_derivative(p);

    R scale(0);
    for (const auto& c : p) scale = std::max(scale, cabs(c));
    const R guard = sqrt(tol) * (R(1) + scale);

    std::vector<Series<C>> out;
    for (const C& t0 : roots) {
        // Newton once on the point to tighten the Durand-Kerner output
        C t = t0;
        for (int it = 0; it < 8; ++it) {
            C dv = poly_eval(dp, t);
            if (cabs(dv) == R(0)) break;
            t -= (poly_eval(p, t) - x0) / dv;
        }
        if (cabs(poly_eval(dp, t)) <= guard)
            throw DomainError("critical value: branches collide");

        Series<C> y;
        y.x0 = x0;
        y.a = {t};
        while (y.length() < terms) {
            int len = std::min(2 * y.length(), terms);
            y.a.resize(static_cast<std::size_t>(len), C(0));
            // y <- y - (P(y) - (x0 + u)) / P'(y)
            Series<C> py = poly_on_series(p, y);
            py.a[0] -= x0;
            if (len > 1) py.a[1] -= C(1);
            Series<C> dpy = poly_on_series(dp, y);
            Series<C> corr = series_div(py, dpy, len);
            for (int j = 0; j < len; ++j)
                y.a[static_cast<std::size_t>(j)] -= corr.coeff(j);
        }
        // residual check: P(y) - (x0+u) must vanish to the truncation order,
        // measured against the magnitudes actually summed in P(y)
        Series<C> res = poly_on_series(p, y);
        res.a[0] -= x0;
        if (terms > 1) res.a[1] -= C(1);
        R worst(0);
        for (const auto& v : res.a) worst = std::max(worst, cabs(v));
        R ymax(1);
        for (const auto& v : y.a) ymax = std::max(ymax, cabs(v));
        R relscale(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it)
            relscale = relscale * ymax + cabs(*it);
        if (worst > sqrt(tol) * (R(1) + relscale) * R(10))
            throw DomainError("series inversion did not converge");
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace dessin
