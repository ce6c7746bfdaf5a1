#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "dessin/dessin.hpp"
#include "dessin/errors.hpp"
#include "dessin/numeric.hpp"
#include "dessin/poly.hpp"

namespace dessin {

// Black and white vertex valencies of a bipartite plane tree with e edges:
// sum(alpha) == sum(beta) == e and #alpha + #beta == e + 1.
struct ValencyData {
    std::vector<int> alpha;
    std::vector<int> beta;

    int edges() const;
    bool tree_property() const;
};

// Cycle lengths of the two rotations, sorted descending.
ValencyData tree_valencies(const Dessin& d);

// Exact representatives of the three normal families.
ExactPoly family_star(int n);
ExactPoly family_chebyshev(int n);
ExactPoly family_two_star(int m);

// A polynomial with exactly two critical values, together with the roots of
// p - v0 and p - v1 and their multiplicities.  Solved polynomials are monic
// with critical values {0, 1} and a black vertex at the origin; the residual
// is the largest coefficient error of the two factorizations, relative to the
// coefficient scale of p.
template <class C>
struct ShabatSolution {
    std::vector<C> poly;                    // lowest degree first
    std::vector<std::pair<C, int>> black;   // (location, valency)
    std::vector<std::pair<C, int>> white;
    std::pair<C, C> critical_values;
    typename NumTraits<C>::Real residual;
};

namespace detail {

template <class C>
std::vector<C> cpoly_mul(const std::vector<C>& a, const std::vector<C>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<C> r(a.size() + b.size() - 1, C(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// monic prod (x - v_i)^{m_i}
template <class C>
std::vector<C> vertex_poly(const std::vector<std::pair<C, int>>& verts) {
    std::vector<C> r{C(1)};
    for (const auto& [v, m] : verts)
        for (int rep = 0; rep < m; ++rep) r = cpoly_mul(r, std::vector<C>{-v, C(1)});
    return r;
}

// quotient of synthetic division by (x - r); exact when r is a root
template <class C>
std::vector<C> divide_root(const std::vector<C>& p, const C& r) {
    std::vector<C> q(p.size() - 1, C(0));
    C carry = p.back();
    for (std::size_t k = p.size() - 1; k >= 1; --k) {
        q[k - 1] = carry;
        carry = p[k - 1] + r * carry;
    }
    return q;
}

// order by (modulus, argument); imaginary parts within snap of zero are
// treated as +0 so that negative reals sort deterministically at +pi
template <class C>
bool mod_arg_less(const C& a, const C& b, typename NumTraits<C>::Real snap) {
    using R = typename NumTraits<C>::Real;
    using std::abs;
    using std::atan2;
    R ma = cabs(a), mb = cabs(b);
    if (abs(ma - mb) > snap) return ma < mb;
    R ia = a.imag(), ib = b.imag();
    if (abs(ia) <= snap) ia = R(0);
    if (abs(ib) <= snap) ib = R(0);
    return atan2(ia, a.real()) < atan2(ib, b.real());
}

template <class C>
typename NumTraits<C>::Real coeff_scale(const std::vector<C>& p) {
    typename NumTraits<C>::Real s(0);
    for (const auto& c : p) s = std::max(s, cabs(c));
    return s;
}

// roots of p - v grouped into vertices: cluster, then polish each center as
// a simple root of the (size-1)-st derivative
template <class C>
std::vector<std::pair<C, int>> value_fibre(const std::vector<C>& p, const C& v,
                                           typename NumTraits<C>::Real tol) {
    using R = typename NumTraits<C>::Real;
    using std::pow;
    std::vector<C> pv = p;
    pv[0] -= v;
    auto pts = roots_durand_kerner(pv);
    const int n = static_cast<int>(pts.size());
    R scale(0);
    for (const auto& z : pts) scale = std::max(scale, cabs(z));
    R radius = std::max(pow(tol, R(1) / R(n)), R(1e-6)) * (R(1) + scale);
    std::vector<std::pair<C, int>> out;
    for (const auto& grp : cluster_points(pts, radius)) {
        C center(0);
        for (int i : grp) center += pts[static_cast<std::size_t>(i)];
        center = center / C(static_cast<double>(grp.size()));
        int m = static_cast<int>(grp.size());
        out.emplace_back(polish_multiple_root(pv, center, m, NumTraits<C>::default_tol()), m);
    }
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        return mod_arg_less(x.first, y.first, radius);
    });
    return out;
}

}  // namespace detail

// Reads the two critical values and the vertex multiplicities off a numeric
// polynomial.  Throws DomainError if the critical values do not fall into at
// most two groups.  With a single critical value v the partner is taken to be
// v + 1, whose fibre is unramified.
template <class C>
ShabatSolution<C> verify_shabat(const std::vector<C>& poly,
                                typename NumTraits<C>::Real tol = NumTraits<C>::default_tol()) {
    using R = typename NumTraits<C>::Real;
    using std::abs;
    using std::sqrt;
    auto p = poly_trim(poly, R(0));
    if (p.size() < 2) throw DomainError("polynomial must have degree at least 1");
    const C lead = p.back();

    auto crit = roots_durand_kerner(poly_derivative(p));
    std::vector<C> values;
    values.reserve(crit.size());
    for (const auto& z : crit) values.push_back(poly_eval(p, z));
    R vscale(0);
    for (const auto& w : values) vscale = std::max(vscale, cabs(w));
    R vradius = std::max(sqrt(tol), R(1e-8)) * (R(1) + vscale);

    C v0(0), v1(1);
    if (!values.empty()) {
        auto groups = cluster_points(values, vradius);
        if (groups.size() > 2) throw DomainError("not a Shabat polynomial");
        std::vector<C> centers;
        for (const auto& grp : groups) {
            C c(0);
            for (int i : grp) c += values[static_cast<std::size_t>(i)];
            centers.push_back(c / C(static_cast<double>(grp.size())));
        }
        std::sort(centers.begin(), centers.end(), [&](const C& a, const C& b) {
            return detail::mod_arg_less(a, b, vradius);
        });
        v0 = centers[0];
        v1 = centers.size() == 2 ? centers[1] : v0 + C(1);
    }

    ShabatSolution<C> sol;
    sol.poly = p;
    sol.critical_values = {v0, v1};
    sol.black = detail::value_fibre(p, v0, tol);
    sol.white = detail::value_fibre(p, v1, tol);

    R pscale = detail::coeff_scale(p);
    sol.residual = R(0);
    for (int side = 0; side < 2; ++side) {
        auto rebuilt = detail::vertex_poly(side == 0 ? sol.black : sol.white);
        for (auto& c : rebuilt) c = c * lead;
        rebuilt[0] += side == 0 ? v0 : v1;
        for (std::size_t i = 0; i < p.size(); ++i)
            sol.residual = std::max(sol.residual, cabs(rebuilt[i] - p[i]) / pscale);
    }
    return sol;
}

// Damped multi-start Newton iteration on the coefficients of
// prod (x-a_i)^{alpha_i} - prod (x-b_j)^{beta_j} - 1, with a_1 pinned at the
// origin.  Both products are monic, so the system is square of size e.
// Returns the distinct converged solutions in seed order; solutions equal up
// to the residual rotation gauge x -> zeta*x with zeta^e = 1 are deduplicated.
template <class C>
std::vector<ShabatSolution<C>> solve_shabat(const ValencyData& vd,
                                            const std::vector<std::uint64_t>& seeds,
                                            typename NumTraits<C>::Real tol =
                                                NumTraits<C>::default_tol()) {
    using R = typename NumTraits<C>::Real;
    using std::cos;
    using std::sin;
    if (!vd.tree_property())
        throw DomainError("valency data does not satisfy the tree property");
    const int n = vd.edges();
    const int p = static_cast<int>(vd.alpha.size());
    const int q = static_cast<int>(vd.beta.size());
    const int nu = p - 1 + q;

    auto assemble = [&](const std::vector<C>& z) {
        std::vector<std::pair<C, int>> black{{C(0), vd.alpha[0]}}, white;
        for (int i = 1; i < p; ++i)
            black.emplace_back(z[static_cast<std::size_t>(i - 1)], vd.alpha[static_cast<std::size_t>(i)]);
        for (int j = 0; j < q; ++j)
            white.emplace_back(z[static_cast<std::size_t>(p - 1 + j)], vd.beta[static_cast<std::size_t>(j)]);
        return std::make_pair(black, white);
    };
    auto residual_vec = [&](const std::vector<C>& a, const std::vector<C>& b) {
        std::vector<C> f(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            f[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
            if (i == 0) f[0] -= C(1);
        }
        return f;
    };
    auto inf_norm = [](const std::vector<C>& f) {
        R w(0);
        for (const auto& c : f) w = std::max(w, cabs(c));
        return w;
    };

    std::vector<ShabatSolution<C>> found;
    const double two_pi = 8 * std::atan(1.0);

    for (std::uint64_t seed : seeds) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<C> z(static_cast<std::size_t>(nu));
        for (auto& w : z) {
            double re, im;
            do {
                re = u(rng);
                im = u(rng);
            } while (re * re + im * im > 1.0);
            w = NumTraits<C>::make(re, im);
        }

        bool converged = false;
        R resid(0);
        std::vector<std::pair<C, int>> black, white;
        std::vector<C> apoly, bpoly;
        for (int iter = 0; iter < 200; ++iter) {
            std::tie(black, white) = assemble(z);
            apoly = detail::vertex_poly(black);
            bpoly = detail::vertex_poly(white);
            auto f = residual_vec(apoly, bpoly);
            resid = inf_norm(f);
            if (resid < tol) {
                converged = true;
                break;
            }
            CMatrix<C> jac(static_cast<std::size_t>(n), std::vector<C>(static_cast<std::size_t>(nu)));
            for (int c = 0; c < nu; ++c) {
                bool is_black = c < p - 1;
                C root = z[static_cast<std::size_t>(c)];
                int mult = is_black ? vd.alpha[static_cast<std::size_t>(c + 1)]
                                    : vd.beta[static_cast<std::size_t>(c - (p - 1))];
                auto col = detail::divide_root(is_black ? apoly : bpoly, root);
                C fac = C(static_cast<double>(is_black ? -mult : mult));
                for (int r = 0; r < n; ++r)
                    jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        fac * col[static_cast<std::size_t>(r)];
            }
            std::vector<C> rhs(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) rhs[static_cast<std::size_t>(i)] = -f[static_cast<std::size_t>(i)];
            auto step = lu_solve(jac, rhs);
            if (!step) break;
            R t(1);
            bool moved = false;
            for (int half = 0; half < 9; ++half) {
                std::vector<C> znew = z;
                for (int i = 0; i < nu; ++i)
                    znew[static_cast<std::size_t>(i)] += C(t) * (*step)[static_cast<std::size_t>(i)];
                auto [nb, nw] = assemble(znew);
                auto fnew = residual_vec(detail::vertex_poly(nb), detail::vertex_poly(nw));
                if (inf_norm(fnew) < resid) {
                    z = std::move(znew);
                    moved = true;
                    break;
                }
                t = t / R(2);
            }
            if (!moved) break;
        }
        if (!converged) continue;

        // degenerate seeds merge vertices and solve a different valency system
        std::vector<C> all;
        for (const auto& [v, m] : black) all.push_back(v);
        for (const auto& [v, m] : white) all.push_back(v);
        R scale(0);
        for (const auto& v : all) scale = std::max(scale, cabs(v));
        R sep = R(1e-6) * (R(1) + scale);
        bool collided = false;
        for (std::size_t i = 0; i < all.size() && !collided; ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (cabs(all[i] - all[j]) < sep) {
                    collided = true;
                    break;
                }
        if (collided) continue;

        ShabatSolution<C> sol;
        sol.poly = apoly;
        sol.black = black;
        sol.white = white;
        sol.critical_values = {C(0), C(1)};
        sol.residual = resid;
        auto vless = [&](const std::pair<C, int>& x, const std::pair<C, int>& y) {
            return detail::mod_arg_less(x.first, y.first, R(1e-9) * (R(1) + scale));
        };
        std::sort(sol.black.begin(), sol.black.end(), vless);
        std::sort(sol.white.begin(), sol.white.end(), vless);

        R match = R(1e-6) * (R(1) + scale);
        auto same_under = [&](const std::vector<std::pair<C, int>>& xs,
                              const std::vector<std::pair<C, int>>& ys, const C& zeta) {
            if (xs.size() != ys.size()) return false;
            std::vector<bool> used(ys.size(), false);
            for (const auto& [v, m] : xs) {
                bool hit = false;
                for (std::size_t j = 0; j < ys.size(); ++j) {
                    if (used[j] || ys[j].second != m) continue;
                    if (cabs(v * zeta - ys[j].first) < match) {
                        used[j] = true;
                        hit = true;
                        break;
                    }
                }
                if (!hit) return false;
            }
            return true;
        };
        bool dup = false;
        for (const auto& prev : found) {
            for (int k = 0; k < n && !dup; ++k) {
                C zeta = NumTraits<C>::make(std::cos(two_pi * k / n), std::sin(two_pi * k / n));
                dup = same_under(sol.black, prev.black, zeta) &&
                      same_under(sol.white, prev.white, zeta);
            }
            if (dup) break;
        }
        if (!dup) found.push_back(std::move(sol));
    }

    if (found.empty()) throw DomainError("no solution found");
    return found;
}

}  // namespace dessin
