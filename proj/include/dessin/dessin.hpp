#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dessin/permutation.hpp"

namespace dessin {

// Bicolored graph on the sphere, encoded by the counterclockwise edge
// rotation at black and white vertices.  Edge labels are 0..edges-1.
struct Dessin {
    Permutation black, white;

    Dessin(Permutation b, Permutation w) : black(std::move(b)), white(std::move(w)) {
        if (black.size() != white.size() || black.size() == 0)
            throw DomainError("dessin permutations must act on the same nonempty set");
    }
    int edges() const { return black.size(); }
};

// orbit of the group <black, white> through edge 0 covers everything
bool is_transitive(const Dessin& d);

struct EulerData {
    int vertices, edges, faces, genus;
};

// Faces are the cycles of black∘white (white applied first).
// Throws DomainError if the dessin is not connected.
EulerData euler_data(const Dessin& d);

// connected, genus 0, one face <=> vertices == edges + 1
bool is_plane_tree(const Dessin& d);

enum class TreeKind { Star, Chain, TwoStar, Other };

struct TreeClass {
    TreeKind kind;
    int param;  // edges for Star/Chain, arms for TwoStar, 0 for Other
    friend bool operator==(const TreeClass&, const TreeClass&) = default;
};

// Precedence Star > Chain > TwoStar > Other, so the one-edge tree is Star(1),
// the two-edge tree is Chain(2), and two-armed 2-stars report as Chain(4).
// Throws DomainError unless is_plane_tree(d).
TreeClass classify_tree(const Dessin& d);

std::string tree_class_str(const TreeClass& c);

// minimal annihilating operator of the tree's Shabat polynomial has order <= 2
bool has_linear_rep_dim_le_2(const Dessin& d);

struct DessinIso {
    Permutation relabel;  // labels of the first dessin -> labels of the second
    bool color_swapped;
};

// Graded search for a relabeling f with f∘black1 = black2∘f and likewise for
// white; the color-swapped variant matches (black1,white1) against
// (white2,black2).  Plain matches are preferred, then the smallest image of
// edge 0.
std::optional<DessinIso> dessins_isomorphic(const Dessin& a, const Dessin& b);

// All plane trees with the given number of edges, up to isomorphism and color
// swap, in a deterministic order.  Supported range: 1 <= edges <= 8.
std::vector<Dessin> enumerate_plane_trees(int edges);

}  // namespace dessin
