#include "dessin/dessin.hpp"

#include <algorithm>
#include <map>

namespace dessin {

bool is_transitive(const Dessin& d) {
    const int e = d.edges();
    std::vector<bool> seen(static_cast<std::size_t>(e), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : {d.black(x), d.white(x)}) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                stack.push_back(y);
                ++count;
            }
        }
    }
    return count == e;
}

EulerData euler_data(const Dessin& d) {
    if (!is_transitive(d)) throw DomainError("dessin is not connected");
    EulerData out;
    out.edges = d.edges();
    out.vertices = d.black.cycle_count() + d.white.cycle_count();
    out.faces = compose(d.black, d.white).cycle_count();
    // v - e + f = 2 - 2g
    out.genus = (2 - (out.vertices - out.edges + out.faces)) / 2;
    return out;
}

bool is_plane_tree(const Dessin& d) {
    if (!is_transitive(d)) return false;
    EulerData ed = euler_data(d);
    return ed.genus == 0 && ed.faces == 1;
}

TreeClass classify_tree(const Dessin& d) {
    if (!is_plane_tree(d)) throw DomainError("not a plane tree");
    const int e = d.edges();
    if (e == 1) return {TreeKind::Star, 1};
    if (e == 2) return {TreeKind::Chain, 2};

    std::vector<int> bt = d.black.cycle_type();
    std::vector<int> wt = d.white.cycle_type();
    const int maxval = std::max(bt.front(), wt.front());
    if (maxval == e) return {TreeKind::Star, e};
    if (maxval <= 2) return {TreeKind::Chain, e};

    // two-star with m arms: one color is m vertices of valency 2, the other
    // is one vertex of valency m plus m leaves
    if (e % 2 == 0) {
        const int m = e / 2;
        auto all_two = [](const std::vector<int>& t) {
            return std::all_of(t.begin(), t.end(), [](int v) { return v == 2; });
        };
        auto hub_and_leaves = [m](const std::vector<int>& t) {
            if (static_cast<int>(t.size()) != m + 1 || t.front() != m) return false;
            return std::all_of(t.begin() + 1, t.end(), [](int v) { return v == 1; });
        };
        if ((all_two(bt) && hub_and_leaves(wt)) ||
            (all_two(wt) && hub_and_leaves(bt)))
            return {TreeKind::TwoStar, m};
    }
    return {TreeKind::Other, 0};
}

std::string tree_class_str(const TreeClass& c) {
    switch (c.kind) {
        case TreeKind::Star:
            return "Star(" + std::to_string(c.param) + ")";
        case TreeKind::Chain:
            return "Chain(" + std::to_string(c.param) + ")";
        case TreeKind::TwoStar:
            return "TwoStar(" + std::to_string(c.param) + ")";
        default:
            return "Other";
    }
}

bool has_linear_rep_dim_le_2(const Dessin& d) {
    return classify_tree(d).kind != TreeKind::Other;
}

namespace {

// relabeling f with f(0)=seed, f∘p = q∘f and f∘r = s∘f, if one exists
std::optional<Permutation> match_from_seed(const Permutation& p,
                                           const Permutation& r,
                                           const Permutation& q,
                                           const Permutation& s, int seed) {
    const int n = p.size();
    std::vector<int> f(static_cast<std::size_t>(n), -1);
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    f[0] = seed;
    hit[static_cast<std::size_t>(seed)] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        const int fx = f[static_cast<std::size_t>(x)];
        const std::pair<int, int> steps[2] = {{p(x), q(fx)}, {r(x), s(fx)}};
        for (auto [nx, want] : steps) {
            int& slot = f[static_cast<std::size_t>(nx)];
            if (slot == -1) {
                if (hit[static_cast<std::size_t>(want)]) return std::nullopt;
                slot = want;
                hit[static_cast<std::size_t>(want)] = true;
                stack.push_back(nx);
            } else if (slot != want) {
                return std::nullopt;
            }
        }
    }
    for (int v : f)
        if (v == -1) return std::nullopt;  // disconnected input
    return Permutation(f);
}

}  // namespace

std::optional<DessinIso> dessins_isomorphic(const Dessin& a, const Dessin& b) {
    if (a.edges() != b.edges()) return std::nullopt;
    for (bool swapped : {false, true}) {
        const Permutation& q = swapped ? b.white : b.black;
        const Permutation& s = swapped ? b.black : b.white;
        if (a.black.cycle_type() != q.cycle_type() ||
            a.white.cycle_type() != s.cycle_type())
            continue;
        for (int seed = 0; seed < b.edges(); ++seed) {
            if (auto f = match_from_seed(a.black, a.white, q, s, seed))
                return DessinIso{*f, swapped};
        }
    }
    return std::nullopt;
}

std::vector<Dessin> enumerate_plane_trees(int edges) {
    if (edges < 1 || edges > 8) throw DomainError("edge count out of range");
    const int e = edges;
    // face permutation fixed to the cycle (0 1 ... e-1); every plane tree has
    // a labeling of this form, and black∘white then has one cycle, so
    // transitivity is automatic
    std::vector<int> tau(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) tau[static_cast<std::size_t>(i)] = (i + 1) % e;
    const Permutation face(tau);

    std::vector<Dessin> reps;
    // group representatives by (cycle type pair) to cut isomorphism checks
    std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> groups;

    std::vector<int> img(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) img[static_cast<std::size_t>(i)] = i;
    do {
        Permutation black(img);
        Permutation white = compose(black.inverse(), face);
        if (black.cycle_count() + white.cycle_count() != e + 1) continue;
        Dessin d(black, white);

        std::vector<int> bt = black.cycle_type(), wt = white.cycle_type();
        std::vector<std::vector<int>> key{bt, wt};
        if (wt < bt) std::swap(key[0], key[1]);  // color swap invariant

        auto& bucket = groups[key];
        bool fresh = true;
        for (std::size_t idx : bucket) {
            if (dessins_isomorphic(d, reps[idx])) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            bucket.push_back(reps.size());
            reps.push_back(std::move(d));
        }
    } while (std::next_permutation(img.begin(), img.end()));
    return reps;
}

}  // namespace dessin
