#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>

#include <algorithm>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "dessin/rational.hpp"

namespace dessin {

namespace mp = boost::multiprecision;

using C53 = std::complex<double>;
using F106 = mp::number<mp::cpp_bin_float<106, mp::digit_base_2>, mp::et_off>;
using C106 = mp::number<mp::complex_adaptor<mp::cpp_bin_float<106, mp::digit_base_2>>, mp::et_off>;
using F212 = mp::number<mp::cpp_bin_float<212, mp::digit_base_2>, mp::et_off>;
using C212 = mp::number<mp::complex_adaptor<mp::cpp_bin_float<212, mp::digit_base_2>>, mp::et_off>;

template <class C>
struct NumTraits;

template <>
struct NumTraits<C53> {
    using Real = double;
    static constexpr int bits = 53;
    static Real eps() { return std::numeric_limits<double>::epsilon(); }
    static Real default_tol() { return 1e-12; }
    static C53 make(double re, double im = 0.0) { return {re, im}; }
    static Real from_rational(const Rational& r) { return r.get_d(); }
    static double to_double(Real x) { return x; }
    static Integer floor_integer(Real x) { return Integer(std::floor(x)); }
};

namespace detail {

template <class F>
F real_from_rational(const Rational& r) {
    return F(r.get_num().get_str()) / F(r.get_den().get_str());
}

template <class F>
Integer floor_via_string(F x) {
    F f = floor(x);
    std::string s = f.str(0, std::ios_base::fixed);
    if (auto dot = s.find('.'); dot != std::string::npos) s.resize(dot);
    if (s.empty() || s == "-") s = "0";
    return Integer(s);
}

}  // namespace detail

template <>
struct NumTraits<C106> {
    using Real = F106;
    static constexpr int bits = 106;
    static Real eps() { return std::numeric_limits<F106>::epsilon(); }
    static Real default_tol() { return Real("1e-30"); }
    static C106 make(double re, double im = 0.0) { return C106(F106(re), F106(im)); }
    static Real from_rational(const Rational& r) { return detail::real_from_rational<F106>(r); }
    static double to_double(const Real& x) { return x.convert_to<double>(); }
    static Integer floor_integer(const Real& x) { return detail::floor_via_string(x); }
};

template <>
struct NumTraits<C212> {
    using Real = F212;
    static constexpr int bits = 212;
    static Real eps() { return std::numeric_limits<F212>::epsilon(); }
    static Real default_tol() { return Real("1e-60"); }
    static C212 make(double re, double im = 0.0) { return C212(F212(re), F212(im)); }
    static Real from_rational(const Rational& r) { return detail::real_from_rational<F212>(r); }
    static double to_double(const Real& x) { return x.convert_to<double>(); }
    static Integer floor_integer(const Real& x) { return detail::floor_via_string(x); }
};

template <class C>
typename NumTraits<C>::Real cabs(const C& z) {
    using std::abs;
    return abs(z);
}

template <class C>
C cfrom_rational(const Rational& re, const Rational& im = Rational(0)) {
    return C(NumTraits<C>::from_rational(re), NumTraits<C>::from_rational(im));
}

// ---------- dense polynomials over C, lowest-first coefficient vectors ----------

template <class C>
C poly_eval(const std::vector<C>& p, const C& x) {
    C acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

template <class C>
std::vector<C> poly_derivative(const std::vector<C>& p) {
    std::vector<C> d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * C(static_cast<int>(i)));
    return d;
}

template <class C>
std::vector<C> poly_trim(std::vector<C> p, typename NumTraits<C>::Real tiny) {
    while (!p.empty() && cabs(p.back()) <= tiny) p.pop_back();
    return p;
}

// ---------- root finding ----------

// Durand-Kerner simultaneous iteration.  Multiple roots come back as tight
// clusters; callers that care cluster and polish afterwards.
template <class C>
std::vector<C> roots_durand_kerner(std::vector<C> p, int max_iter = 500,
                                   typename NumTraits<C>::Real tol =
                                       NumTraits<C>::default_tol()) {
    using R = typename NumTraits<C>::Real;
    using std::sqrt;
    p = poly_trim(p, R(0));
    if (p.size() <= 1) return {};
    const int n = static_cast<int>(p.size()) - 1;
    const C lead = p.back();
    for (auto& c : p) c = c / lead;

    R radius(1);
    for (int i = 0; i < n; ++i) radius = std::max(radius, cabs(p[static_cast<std::size_t>(i)]));
    radius = radius + R(1);

    using std::atan;
    const R pi = R(4) * atan(R(1));
    std::vector<C> z(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        R ang = (R(2) * pi * R(j)) / R(n) + R(1) / R(2 * n + 1);
        using std::cos;
        using std::sin;
        z[static_cast<std::size_t>(j)] = C(radius * cos(ang), radius * sin(ang)) * C(R(0.95), R(0.05));
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        R worst(0);
        for (int j = 0; j < n; ++j) {
            C denom(1);
            for (int k = 0; k < n; ++k)
                if (k != j)
                    denom = denom * (z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(k)]);
            if (cabs(denom) == R(0)) {
                z[static_cast<std::size_t>(j)] += C(tol + NumTraits<C>::eps(), R(0));
                worst = std::max(worst, R(1));
                continue;
            }
            C delta = poly_eval(p, z[static_cast<std::size_t>(j)]) / denom;
            z[static_cast<std::size_t>(j)] -= delta;
            worst = std::max(worst, cabs(delta) / (R(1) + cabs(z[static_cast<std::size_t>(j)])));
        }
        if (worst <= tol) break;
    }
    return z;
}

// Greedy transitive clustering by distance <= radius; returns index groups,
// deterministic for a fixed input order.
template <class C>
std::vector<std::vector<int>> cluster_points(const std::vector<C>& pts,
                                             typename NumTraits<C>::Real radius) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int ncomp = 0;
    for (int i = 0; i < n; ++i) {
        if (comp[static_cast<std::size_t>(i)] != -1) continue;
        comp[static_cast<std::size_t>(i)] = ncomp;
        std::vector<int> stack{i};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (comp[static_cast<std::size_t>(j)] != -1) continue;
                if (cabs(pts[static_cast<std::size_t>(x)] - pts[static_cast<std::size_t>(j)]) <= radius) {
                    comp[static_cast<std::size_t>(j)] = ncomp;
                    stack.push_back(j);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(ncomp));
    for (int i = 0; i < n; ++i) groups[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].push_back(i);
    return groups;
}

// Newton-polish the center of a root cluster of multiplicity m: a simple root
// of the (m-1)-st derivative.
template <class C>
C polish_multiple_root(const std::vector<C>& p, C z, int multiplicity,
                       typename NumTraits<C>::Real tol) {
    using R = typename NumTraits<C>::Real;
    std::vector<C> f = p;
    for (int k = 1; k < multiplicity; ++k) f = poly_derivative(f);
    std::vector<C> fp = poly_derivative(f);
    for (int it = 0; it < 60; ++it) {
        C dv = poly_eval(fp, z);
        if (cabs(dv) == R(0)) break;
        C step = poly_eval(f, z) / dv;
        z -= step;
        if (cabs(step) <= tol * (R(1) + cabs(z))) break;
    }
    return z;
}

// ---------- dense linear algebra ----------

template <class C>
using CMatrix = std::vector<std::vector<C>>;

// in-place partial-pivot LU solve; nullopt when the matrix is singular to
// working precision
template <class C>
std::optional<std::vector<C>> lu_solve(CMatrix<C> a, std::vector<C> b) {
    using R = typename NumTraits<C>::Real;
    const int n = static_cast<int>(a.size());
    R scale(0);
    for (const auto& row : a)
        for (const auto& v : row) scale = std::max(scale, cabs(v));
    if (scale == R(0)) return std::nullopt;
    const R tiny = scale * NumTraits<C>::eps() * R(n * 4 + 4);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        R best = cabs(a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]);
        for (int i = k + 1; i < n; ++i) {
            R v = cabs(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= tiny) return std::nullopt;
        std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(piv)]);
        std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
        for (int i = k + 1; i < n; ++i) {
            C f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] /
                  a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            if (f == C(0)) continue;
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = C(0);
            for (int j = k + 1; j < n; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
        }
    }
    std::vector<C> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        C acc = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            acc -= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = acc / a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    }
    return x;
}

// singular values by one-sided Jacobi on the columns, descending
template <class C>
std::vector<typename NumTraits<C>::Real> singular_values(const CMatrix<C>& a) {
    using R = typename NumTraits<C>::Real;
    using std::sqrt;
    if (a.empty() || a[0].empty()) return {};
    int m = static_cast<int>(a.size());
    int n = static_cast<int>(a[0].size());
    // store columns; transpose if wide (singular values are shared)
    CMatrix<C> col;
    if (m >= n) {
        col.assign(static_cast<std::size_t>(n), std::vector<C>(static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    } else {
        using std::conj;
        col.assign(static_cast<std::size_t>(m), std::vector<C>(static_cast<std::size_t>(n)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) col[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = conj(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        std::swap(m, n);
    }

    const R conv = NumTraits<C>::eps() * R(16);
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool changed = false;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                auto& bp = col[static_cast<std::size_t>(p)];
                auto& bq = col[static_cast<std::size_t>(q)];
                R alpha(0), beta(0);
                C gamma(0);
                using std::conj;
                for (int i = 0; i < m; ++i) {
                    using std::norm;
                    alpha += norm(bp[static_cast<std::size_t>(i)]);
                    beta += norm(bq[static_cast<std::size_t>(i)]);
                    gamma += conj(bp[static_cast<std::size_t>(i)]) * bq[static_cast<std::size_t>(i)];
                }
                R g = cabs(gamma);
                if (g <= conv * sqrt(alpha * beta) || g == R(0)) continue;
                changed = true;
                C phase = gamma / C(g);
                R tau = (beta - alpha) / (R(2) * g);
                using std::abs;
                // small root of t^2 - 2 tau t - 1 = 0
                R t = (tau >= R(0) ? R(-1) : R(1)) / (abs(tau) + sqrt(R(1) + tau * tau));
                R c = R(1) / sqrt(R(1) + t * t);
                R s = c * t;
                for (int i = 0; i < m; ++i) {
                    C xp = bp[static_cast<std::size_t>(i)];
                    C xq = bq[static_cast<std::size_t>(i)];
                    bp[static_cast<std::size_t>(i)] = C(c) * xp + C(s) * conj(phase) * xq;
                    bq[static_cast<std::size_t>(i)] = C(c) * xq - C(s) * phase * xp;
                }
            }
        }
        if (!changed) break;
    }

    std::vector<R> sv;
    for (int j = 0; j < n; ++j) {
        R acc(0);
        using std::norm;
        for (int i = 0; i < m; ++i) acc += norm(col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        sv.push_back(sqrt(acc));
    }
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

template <class C>
int numeric_rank(const CMatrix<C>& a, typename NumTraits<C>::Real rel_tol) {
    auto sv = singular_values(a);
    if (sv.empty() || sv[0] == typename NumTraits<C>::Real(0)) return 0;
    int r = 0;
    for (const auto& s : sv)
        if (s > rel_tol * sv[0]) ++r;
    return r;
}

}  // namespace dessin
