#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dessin/moebius.hpp"

using namespace dessin;

namespace {

Permutation pc(int n, const std::vector<std::vector<int>>& cycles) {
    return Permutation::from_cycles(n, cycles);
}

// the four-edge tree with a trivalent black vertex and a two-edge tail
Dessin t_shape() { return {pc(4, {{0, 1, 2}}), pc(4, {{2, 3}})}; }

Dessin star(int n, bool black_center) {
    std::vector<int> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = i;
    Permutation rot = pc(n, {cyc});
    Permutation id = Permutation::identity(n);
    return black_center ? Dessin(rot, id) : Dessin(id, rot);
}

// path with e edges labeled consecutively
Dessin chain(int e) {
    std::vector<std::vector<int>> bc, wc;
    for (int v = 0; v <= e; v += 2) {
        std::vector<int> around;
        if (v - 1 >= 0) around.push_back(v - 1);
        if (v < e) around.push_back(v);
        if (around.size() == 2) bc.push_back(around);
    }
    for (int v = 1; v <= e; v += 2) {
        std::vector<int> around;
        around.push_back(v - 1);
        if (v < e) around.push_back(v);
        if (around.size() == 2) wc.push_back(around);
    }
    return {pc(e, bc), pc(e, wc)};
}

Dessin two_star(int m) {
    std::vector<std::vector<int>> bc, wc;
    std::vector<int> hub;
    for (int k = 0; k < m; ++k) {
        bc.push_back({2 * k, 2 * k + 1});
        hub.push_back(2 * k);
    }
    wc.push_back(hub);
    return {pc(2 * m, bc), pc(2 * m, wc)};
}

}  // namespace

TEST_CASE("permutation basics") {
    Permutation p = pc(5, {{0, 1, 2}, {3, 4}});
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 4);
    CHECK(p.inverse()(1) == 0);
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(p.cycle_type() == std::vector<int>{3, 2});

    Permutation q = pc(5, {{2, 0, 1}, {4, 3}});
    CHECK(q.cycles() == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});

    // compose applies the right factor first
    Permutation a = pc(3, {{0, 1}});
    Permutation b = pc(3, {{1, 2}});
    CHECK(compose(a, b) == pc(3, {{0, 1, 2}}));

    CHECK_THROWS_AS(Permutation({0, 0}), DomainError);
    CHECK_THROWS_AS(pc(3, {{0, 1}, {1, 2}}), DomainError);
    CHECK_THROWS_AS(pc(2, {{0, 5}}), DomainError);
}

TEST_CASE("euler data") {
    Dessin t = t_shape();
    EulerData ed = euler_data(t);
    CHECK(ed.vertices == 5);
    CHECK(ed.edges == 4);
    CHECK(ed.faces == 1);
    CHECK(ed.genus == 0);
    CHECK(is_plane_tree(t));

    // two distinct edges joining the same pair of vertices: a sphere 2-gon
    Dessin bigon(pc(2, {{0, 1}}), pc(2, {{0, 1}}));
    EulerData eb = euler_data(bigon);
    CHECK(eb.vertices == 2);
    CHECK(eb.faces == 2);
    CHECK(eb.genus == 0);
    CHECK_FALSE(is_plane_tree(bigon));

    // torus graph: one black and two white vertices
    Dessin torus(pc(4, {{0, 1, 2, 3}}), pc(4, {{0, 2}, {1, 3}}));
    CHECK(euler_data(torus).genus == 1);
    CHECK_FALSE(is_plane_tree(torus));

    Dessin split(Permutation::identity(2), Permutation::identity(2));
    CHECK_FALSE(is_transitive(split));
    CHECK_THROWS_AS(euler_data(split), DomainError);
    CHECK_FALSE(is_plane_tree(split));
}

TEST_CASE("classification") {
    CHECK(classify_tree(Dessin(Permutation::identity(1),
                               Permutation::identity(1))) ==
          TreeClass{TreeKind::Star, 1});
    CHECK(classify_tree(Dessin(pc(2, {{0, 1}}), Permutation::identity(2))) ==
          TreeClass{TreeKind::Chain, 2});
    CHECK(classify_tree(star(5, true)) == TreeClass{TreeKind::Star, 5});
    CHECK(classify_tree(star(5, false)) == TreeClass{TreeKind::Star, 5});
    CHECK(classify_tree(chain(5)) == TreeClass{TreeKind::Chain, 5});
    CHECK(classify_tree(two_star(3)) == TreeClass{TreeKind::TwoStar, 3});
    // a two-armed two-star is just the four-edge path
    CHECK(classify_tree(two_star(2)) == TreeClass{TreeKind::Chain, 4});
    CHECK(classify_tree(t_shape()) == TreeClass{TreeKind::Other, 0});

    Dessin crooked(pc(5, {{0, 1, 2}}), pc(5, {{2, 3, 4}}));
    CHECK(is_plane_tree(crooked));
    CHECK(classify_tree(crooked) == TreeClass{TreeKind::Other, 0});

    CHECK(tree_class_str(TreeClass{TreeKind::TwoStar, 4}) == "TwoStar(4)");
    CHECK(tree_class_str(TreeClass{TreeKind::Other, 0}) == "Other");

    Dessin bigon(pc(2, {{0, 1}}), pc(2, {{0, 1}}));
    CHECK_THROWS_AS(classify_tree(bigon), DomainError);

    CHECK(has_linear_rep_dim_le_2(star(7, true)));
    CHECK(has_linear_rep_dim_le_2(chain(6)));
    CHECK(has_linear_rep_dim_le_2(two_star(3)));
    CHECK_FALSE(has_linear_rep_dim_le_2(t_shape()));
    CHECK_FALSE(has_linear_rep_dim_le_2(crooked));
}

TEST_CASE("isomorphism") {
    // chain-3 in the involution labeling and in the consecutive labeling
    Dessin d1(pc(3, {{1, 2}}), pc(3, {{0, 1}}));
    Dessin d2 = chain(3);
    auto iso = dessins_isomorphic(d1, d2);
    REQUIRE(iso);
    const Permutation& f = iso->relabel;
    const Permutation& tb = iso->color_swapped ? d2.white : d2.black;
    const Permutation& tw = iso->color_swapped ? d2.black : d2.white;
    CHECK(compose(f, d1.black) == compose(tb, f));
    CHECK(compose(f, d1.white) == compose(tw, f));

    auto sw = dessins_isomorphic(star(3, true), star(3, false));
    REQUIRE(sw);
    CHECK(sw->color_swapped);

    CHECK_FALSE(dessins_isomorphic(star(4, true), chain(4)));
    CHECK_FALSE(dessins_isomorphic(chain(3), chain(4)));
    CHECK(dessins_isomorphic(t_shape(), t_shape()));
}

TEST_CASE("enumeration of plane trees") {
    CHECK(enumerate_plane_trees(1).size() == 1);
    CHECK(enumerate_plane_trees(2).size() == 1);
    CHECK(enumerate_plane_trees(3).size() == 2);

    auto four = enumerate_plane_trees(4);
    REQUIRE(four.size() == 3);
    std::multiset<std::string> names;
    for (const auto& d : four) names.insert(tree_class_str(classify_tree(d)));
    CHECK(names == std::multiset<std::string>{"Chain(4)", "Other", "Star(4)"});

    CHECK_THROWS_AS(enumerate_plane_trees(0), DomainError);
    CHECK_THROWS_AS(enumerate_plane_trees(9), DomainError);

    // determinism
    auto again = enumerate_plane_trees(4);
    for (std::size_t i = 0; i < four.size(); ++i) {
        CHECK(four[i].black == again[i].black);
        CHECK(four[i].white == again[i].white);
    }

    for (int e = 1; e <= 6; ++e) {
        auto reps = enumerate_plane_trees(e);
        for (const auto& d : reps) CHECK(is_plane_tree(d));
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK_FALSE(dessins_isomorphic(reps[i], reps[j]));
    }
}

TEST_CASE("enumeration agrees with the full double scan") {
    for (int e = 2; e <= 5; ++e) {
        std::vector<Dessin> brute;
        std::vector<int> bi(static_cast<std::size_t>(e));
        for (int i = 0; i < e; ++i) bi[static_cast<std::size_t>(i)] = i;
        do {
            Permutation black(bi);
            std::vector<int> wi(static_cast<std::size_t>(e));
            for (int i = 0; i < e; ++i) wi[static_cast<std::size_t>(i)] = i;
            do {
                Dessin d(black, Permutation(wi));
                if (!is_plane_tree(d)) continue;
                bool fresh = true;
                for (const auto& r : brute)
                    if (dessins_isomorphic(d, r)) {
                        fresh = false;
                        break;
                    }
                if (fresh) brute.push_back(d);
            } while (std::next_permutation(wi.begin(), wi.end()));
        } while (std::next_permutation(bi.begin(), bi.end()));

        auto fast = enumerate_plane_trees(e);
        CHECK(fast.size() == brute.size());
        for (const auto& d : brute) {
            int hits = 0;
            for (const auto& r : fast)
                if (dessins_isomorphic(d, r)) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("chordal metric and moebius transforms") {
    const Cplx inf{std::numeric_limits<double>::infinity(), 0.0};
    CHECK(chordal(Cplx(0), inf) == doctest::Approx(1.0));
    CHECK(chordal(Cplx(1), Cplx(1)) == doctest::Approx(0.0));
    CHECK(chordal(Cplx(0), Cplx(1)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(chordal(inf, inf) == doctest::Approx(0.0));

    MoebiusTransform inv{0.0, 1.0, 1.0, 0.0};  // 1/z
    CHECK(std::isinf(inv.apply(Cplx(0)).real()));
    CHECK(inv.apply(inf) == Cplx(0.0));
    CHECK(inv.apply(Cplx(2)) == Cplx(0.5));
}

TEST_CASE("moebius representation of stars and chains") {
    for (bool black_center : {true, false}) {
        Dessin s = star(5, black_center);
        auto rep = moebius_representation(s);
        REQUIRE(rep);
        REQUIRE(rep->edge_points.size() == 5);
        for (Cplx z : rep->edge_points)
            CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
        auto pa = induced_permutation(rep->A, rep->edge_points);
        auto pb = induced_permutation(rep->B, rep->edge_points);
        REQUIRE(pa);
        REQUIRE(pb);
        CHECK(*pa == s.black);
        CHECK(*pb == s.white);
    }

    Dessin model(pc(3, {{1, 2}}), pc(3, {{0, 1}}));
    auto rep = moebius_representation(model);
    REQUIRE(rep);
    auto pa = induced_permutation(rep->A, rep->edge_points);
    auto pb = induced_permutation(rep->B, rep->edge_points);
    REQUIRE(pa);
    REQUIRE(pb);
    CHECK(*pa == model.black);
    CHECK(*pb == model.white);
    // points are the cube roots of unity
    for (int k = 0; k < 3; ++k) {
        double best = 1.0;
        for (Cplx z : rep->edge_points)
            best = std::min(best,
                            chordal(z, std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0)));
        CHECK(best < 1e-9);
    }

    for (int e : {2, 3, 4, 5, 6, 7, 8}) {
        auto r = moebius_representation(chain(e));
        REQUIRE(r);
        auto a = induced_permutation(r->A, r->edge_points);
        auto b = induced_permutation(r->B, r->edge_points);
        REQUIRE(a);
        REQUIRE(b);
        CHECK(*a == chain(e).black);
        CHECK(*b == chain(e).white);
    }

    CHECK_FALSE(moebius_representation(t_shape()));
    CHECK_FALSE(moebius_representation(two_star(3)));
    CHECK_FALSE(moebius_representation(
        Dessin(pc(5, {{0, 1, 2}}), pc(5, {{2, 3, 4}}))));
}

TEST_CASE("moebius representation exists exactly for stars and chains") {
    for (int e = 1; e <= 6; ++e) {
        for (const auto& d : enumerate_plane_trees(e)) {
            TreeKind k = classify_tree(d).kind;
            bool expect = (k == TreeKind::Star || k == TreeKind::Chain);
            CHECK(moebius_representation(d).has_value() == expect);
        }
    }
}
