#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "dessin/dessin.hpp"
#include "dessin/errors.hpp"
#include "dessin/numeric.hpp"
#include "dessin/permutation.hpp"
#include "dessin/shabat.hpp"

namespace dessin {

// Closed loop for analytic continuation: from the base point straight to the
// circle of the given radius around center, once around counterclockwise,
// and straight back.  The circle must not pass through or enclose the base
// point, and the swept region may contain no critical value other than the
// encircled one.
template <class C>
struct LoopSpec {
    C base_point;
    C center;
    typename NumTraits<C>::Real radius;
    int steps = 64;
};

struct MonodromyResult {
    Permutation sigma_0, sigma_1;  // fibre permutations; sigma_0 belongs to the
                                   // critical value of smaller modulus (ties by argument)
    double certificate;            // max relative root-tracking residual accepted
};

struct RHVerification {
    bool matches;
    std::optional<DessinIso> iso;
};

namespace detail {

template <class C>
bool newton_to(const std::vector<C>& p, const std::vector<C>& dp, C& t, const C& x,
               typename NumTraits<C>::Real tol, typename NumTraits<C>::Real& resid) {
    using R = typename NumTraits<C>::Real;
    for (int it = 0; it < 30; ++it) {
        C d = poly_eval(dp, t);
        if (cabs(d) == R(0)) return false;
        C step = (poly_eval(p, t) - x) / d;
        t -= step;
        if (cabs(step) <= tol * (R(1) + cabs(t))) {
            resid = cabs(poly_eval(p, t) - x) / (R(1) + cabs(x));
            return resid <= tol;
        }
    }
    return false;
}

// one predictor-corrector sweep of the whole fibre from xa to xb, subdividing
// whenever a track stalls, moves by a sizable fraction of the distance to its
// nearest neighbour, or two continued roots land too close together
template <class C>
void advance_fibre(const std::vector<C>& p, const std::vector<C>& dp, std::vector<C>& roots,
                   const C& xa, const C& xb, typename NumTraits<C>::Real tol,
                   typename NumTraits<C>::Real& cert, int depth) {
    using R = typename NumTraits<C>::Real;
    const std::size_t n = roots.size();
    std::vector<C> next = roots;
    R worst(0);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
        C d = poly_eval(dp, roots[i]);
        if (cabs(d) > R(0)) next[i] = roots[i] + (xb - xa) / d;
        R resid(0);
        ok = newton_to(p, dp, next[i], xb, tol, resid);
        worst = std::max(worst, resid);
        if (ok && n > 1) {
            R nearest(0);
            bool first = true;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                R dist = cabs(roots[i] - roots[j]);
                if (first || dist < nearest) nearest = dist, first = false;
            }
            if (cabs(next[i] - roots[i]) > nearest * R(0.45)) ok = false;
        }
    }
    if (ok) {
        R scale(0);
        for (const auto& t : next) scale = std::max(scale, cabs(t));
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (cabs(next[i] - next[j]) < R(10) * tol * (R(1) + scale)) {
                    ok = false;
                    break;
                }
    }
    if (!ok) {
        if (depth >= 26) throw DomainError("increase precision");
        C mid = (xa + xb) / C(2);
        advance_fibre(p, dp, roots, xa, mid, tol, cert, depth + 1);
        advance_fibre(p, dp, roots, mid, xb, tol, cert, depth + 1);
        return;
    }
    roots = std::move(next);
    cert = std::max(cert, worst);
}

template <class C>
Permutation track_loop(const std::vector<C>& poly, const LoopSpec<C>& loop,
                       typename NumTraits<C>::Real tol,
                       typename NumTraits<C>::Real* certificate, bool ccw) {
    using R = typename NumTraits<C>::Real;
    using std::atan;
    using std::atan2;
    using std::cos;
    using std::sin;
    if (!(loop.radius > R(0)) || loop.steps < 16) throw DomainError("invalid loop");
    auto p = poly_trim(poly, R(0));
    if (p.size() < 2) throw DomainError("polynomial must have degree at least 1");
    const int n = static_cast<int>(p.size()) - 1;
    auto dp = poly_derivative(p);

    std::vector<C> shifted = p;
    shifted[0] -= loop.base_point;
    auto fibre = roots_durand_kerner(shifted);
    R ignored(0);
    for (auto& t : fibre)
        if (!newton_to(p, dp, t, loop.base_point, tol, ignored))
            throw DomainError("base point is not regular");
    std::sort(fibre.begin(), fibre.end(), [](const C& a, const C& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    R minsep(0);
    bool first = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            R d = cabs(fibre[static_cast<std::size_t>(i)] - fibre[static_cast<std::size_t>(j)]);
            if (first || d < minsep) minsep = d, first = false;
        }
    if (!first && minsep <= R(10) * tol * (R(1) + cabs(loop.base_point)))
        throw DomainError("base point is not regular");

    C offset = loop.base_point - loop.center;
    if (!(cabs(offset) > loop.radius)) throw DomainError("invalid loop");
    C entry = loop.center + offset * C(loop.radius / cabs(offset), R(0));

    std::vector<C> waypoints{loop.base_point};
    const int leg = loop.steps / 2;
    for (int k = 1; k <= leg; ++k)
        waypoints.push_back(loop.base_point +
                            (entry - loop.base_point) * C(R(k) / R(leg), R(0)));
    R phi0 = atan2(entry.imag() - loop.center.imag(), entry.real() - loop.center.real());
    const R two_pi = R(8) * atan(R(1));
    for (int k = 1; k <= loop.steps; ++k) {
        R ang = ccw ? phi0 + two_pi * R(k) / R(loop.steps)
                    : phi0 - two_pi * R(k) / R(loop.steps);
        waypoints.push_back(loop.center + C(loop.radius * cos(ang), loop.radius * sin(ang)));
    }
    for (int k = 1; k <= leg; ++k)
        waypoints.push_back(entry + (loop.base_point - entry) * C(R(k) / R(leg), R(0)));

    std::vector<C> roots = fibre;
    R cert(0);
    for (std::size_t w = 1; w < waypoints.size(); ++w)
        advance_fibre(p, dp, roots, waypoints[w - 1], waypoints[w], tol, cert, 0);

    std::vector<int> img(static_cast<std::size_t>(n), -1);
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        int best = -1;
        R bestd(0);
        for (int j = 0; j < n; ++j) {
            R d = cabs(roots[static_cast<std::size_t>(i)] - fibre[static_cast<std::size_t>(j)]);
            if (best < 0 || d < bestd) best = j, bestd = d;
        }
        if (taken[static_cast<std::size_t>(best)] || (n > 1 && bestd > minsep / R(3)))
            throw DomainError("increase precision");
        taken[static_cast<std::size_t>(best)] = true;
        img[static_cast<std::size_t>(i)] = best;
    }
    if (certificate) *certificate = cert;
    return Permutation(img);
}

}  // namespace detail

// Continues the fibre {t : p(t) = base_point} once counterclockwise around the
// loop and returns the induced permutation of the fibre labels, which are
// assigned by sorting the base fibre by (real, imaginary).  Every accepted
// Newton step has relative residual at most tol; the worst one is written to
// *certificate when given.
template <class C>
Permutation track_roots(const std::vector<C>& poly, const LoopSpec<C>& loop,
                        typename NumTraits<C>::Real tol = typename NumTraits<C>::Real(1e-10),
                        typename NumTraits<C>::Real* certificate = nullptr) {
    return detail::track_loop(poly, loop, tol, certificate, true);
}

// Monodromy pair of a polynomial with at most two finite critical values.
// The base point is the midpoint of the segment joining them and each loop's
// radius is half the distance from its critical value to the base point, so
// the loops are disjoint and each encircles exactly one value.  An unramified
// fibre needs no tracking: its permutation is the identity.
template <class C>
MonodromyResult recover_dessin(const std::vector<C>& poly,
                               typename NumTraits<C>::Real tol =
                                   typename NumTraits<C>::Real(1e-10)) {
    using R = typename NumTraits<C>::Real;
    auto sol = verify_shabat<C>(poly);
    const int n = static_cast<int>(sol.poly.size()) - 1;
    const C v0 = sol.critical_values.first, v1 = sol.critical_values.second;
    const C base = (v0 + v1) / C(2);
    const R radius = cabs(v1 - v0) / R(4);

    auto ramified = [](const std::vector<std::pair<C, int>>& fibre) {
        for (const auto& zm : fibre)
            if (zm.second > 1) return true;
        return false;
    };
    R c0(0), c1(0);
    Permutation s0 = Permutation::identity(n), s1 = s0;
    if (ramified(sol.black))
        s0 = track_roots(sol.poly, LoopSpec<C>{base, v0, radius, 64}, tol, &c0);
    if (ramified(sol.white))
        s1 = track_roots(sol.poly, LoopSpec<C>{base, v1, radius, 64}, tol, &c1);
    return MonodromyResult{s0, s1, NumTraits<C>::to_double(std::max(c0, c1))};
}

// Does the polynomial realize the given plane tree?  Matching is up to
// relabeling and color swap.
template <class C>
RHVerification verify_riemann_hilbert(const Dessin& d, const std::vector<C>& poly,
                                      typename NumTraits<C>::Real tol =
                                          typename NumTraits<C>::Real(1e-10)) {
    if (!is_plane_tree(d)) throw DomainError("dessin is not a plane tree");
    auto mr = recover_dessin(poly, tol);
    if (mr.sigma_0.size() != d.edges()) return {false, std::nullopt};
    Dessin candidate(mr.sigma_0, mr.sigma_1);
    auto iso = dessins_isomorphic(candidate, d);
    return {iso.has_value(), iso};
}

}  // namespace dessin
