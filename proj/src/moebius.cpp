#include "dessin/moebius.hpp"

#include <cmath>
#include <numbers>

namespace dessin {

namespace {

bool is_inf(Cplx z) {
    return std::isinf(z.real()) || std::isinf(z.imag());
}

const Cplx kInf{std::numeric_limits<double>::infinity(), 0.0};

}  // namespace

Cplx MoebiusTransform::apply(Cplx z) const {
    if (is_inf(z)) {
        if (c == Cplx(0.0)) return kInf;
        return a / c;
    }
    Cplx den = c * z + d;
    if (den == Cplx(0.0)) return kInf;
    return (a * z + b) / den;
}

double chordal(Cplx z, Cplx w) {
    const bool zi = is_inf(z), wi = is_inf(w);
    if (zi && wi) return 0.0;
    if (zi || wi) {
        Cplx f = zi ? w : z;
        return 1.0 / std::sqrt(1.0 + std::norm(f));
    }
    return std::abs(z - w) /
           std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

std::optional<Permutation> induced_permutation(const MoebiusTransform& t,
                                               const std::vector<Cplx>& points,
                                               double tol) {
    const int n = static_cast<int>(points.size());
    std::vector<int> img(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        Cplx w = t.apply(points[static_cast<std::size_t>(i)]);
        int best = -1;
        double best_d = tol;
        for (int j = 0; j < n; ++j) {
            double dd = chordal(w, points[static_cast<std::size_t>(j)]);
            if (dd <= best_d) {
                best_d = dd;
                best = j;
            }
        }
        if (best < 0 || used[static_cast<std::size_t>(best)]) return std::nullopt;
        used[static_cast<std::size_t>(best)] = true;
        img[static_cast<std::size_t>(i)] = best;
    }
    return Permutation(img);
}

std::optional<MoebiusRep> moebius_representation(const Dessin& d) {
    const TreeClass cls = classify_tree(d);
    if (cls.kind != TreeKind::Star && cls.kind != TreeKind::Chain)
        return std::nullopt;

    const int n = d.edges();
    const double two_pi = 2.0 * std::numbers::pi;
    const Cplx theta = std::polar(1.0, two_pi / n);

    Permutation model_black = Permutation::identity(n);
    Permutation model_white = Permutation::identity(n);
    MoebiusTransform map_a, map_b;
    if (cls.kind == TreeKind::Star) {
        // theta^k -> theta^(k+1) under z -> theta z; the other color fixes
        // every edge
        std::vector<int> cyc(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) cyc[static_cast<std::size_t>(k)] = (k + 1) % n;
        model_black = Permutation(cyc);
        map_a = {theta, 0.0, 0.0, 1.0};
        map_b = {1.0, 0.0, 0.0, 1.0};
    } else {
        // z -> 1/z sends theta^k to theta^(-k); z -> theta/z sends it to
        // theta^(1-k)
        std::vector<int> ia(static_cast<std::size_t>(n)), ib(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            ia[static_cast<std::size_t>(k)] = (n - k) % n;
            ib[static_cast<std::size_t>(k)] = (n + 1 - k) % n;
        }
        model_black = Permutation(ia);
        model_white = Permutation(ib);
        map_a = {0.0, 1.0, 1.0, 0.0};
        map_b = {0.0, theta, 1.0, 0.0};
    }

    auto iso = dessins_isomorphic(Dessin(model_black, model_white), d);
    if (!iso) return std::nullopt;  // cannot happen for matching classes

    MoebiusRep rep;
    rep.A = iso->color_swapped ? map_b : map_a;
    rep.B = iso->color_swapped ? map_a : map_b;
    rep.edge_points.assign(static_cast<std::size_t>(n), Cplx(0.0));
    for (int k = 0; k < n; ++k)
        rep.edge_points[static_cast<std::size_t>(iso->relabel(k))] =
            std::polar(1.0, two_pi * k / n);
    return rep;
}

}  // namespace dessin
