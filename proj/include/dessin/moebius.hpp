#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "dessin/dessin.hpp"

namespace dessin {

using Cplx = std::complex<double>;

// (a z + b) / (c z + d); the point at infinity is encoded by an infinite
// component, and apply() maps through it consistently.
struct MoebiusTransform {
    Cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};
    Cplx apply(Cplx z) const;
};

// distance on the Riemann sphere: |z-w| / sqrt((1+|z|^2)(1+|w|^2)),
// extended continuously to infinity
double chordal(Cplx z, Cplx w);

// permutation i -> j with t(points[i]) == points[j] within the chordal
// tolerance; nullopt when some image misses or the matching is not bijective
std::optional<Permutation> induced_permutation(const MoebiusTransform& t,
                                               const std::vector<Cplx>& points,
                                               double tol = 1e-9);

struct MoebiusRep {
    MoebiusTransform A, B;          // realize black resp. white
    std::vector<Cplx> edge_points;  // edge_points[i] carries edge label i
};

// Dimension-one representation: exists exactly for stars and chains.  For a
// star, A is a rotation and B the identity (or the other way around, to match
// the colors); for a chain both are involutions z -> 1/z and z -> theta/z.
// The induced permutations on edge_points reproduce the input colors exactly.
std::optional<MoebiusRep> moebius_representation(const Dessin& d);

}  // namespace dessin
