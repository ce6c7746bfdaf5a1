#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <vector>

#include "dessin/shabat.hpp"

using namespace dessin;

namespace {

template <class C>
std::vector<C> to_c(const ExactPoly& p) {
    std::vector<C> out;
    for (int i = 0; i <= p.degree(); ++i)
        out.push_back(cfrom_rational<C>(p.coeff(i), rat(0)));
    return out;
}

template <class C>
std::vector<int> valencies(const std::vector<std::pair<C, int>>& verts) {
    std::vector<int> v;
    for (const auto& [z, m] : verts) v.push_back(m);
    std::sort(v.rbegin(), v.rend());
    return v;
}

template <class C>
std::vector<int> combined_valencies(const ShabatSolution<C>& s) {
    auto v = valencies(s.black);
    auto w = valencies(s.white);
    v.insert(v.end(), w.begin(), w.end());
    std::sort(v.rbegin(), v.rend());
    return v;
}

// p(s*x + t)
template <class C>
std::vector<C> precompose_affine(const std::vector<C>& p, const C& s, const C& t) {
    std::vector<C> r{p.back()};
    for (int k = static_cast<int>(p.size()) - 2; k >= 0; --k) {
        r = detail::cpoly_mul(r, std::vector<C>{t, s});
        r[0] += p[static_cast<std::size_t>(k)];
    }
    return r;
}

}  // namespace

TEST_CASE("normal family constructors") {
    CHECK(family_star(1) == ExactPoly{0, 1});
    CHECK(family_star(5) == ExactPoly::monomial(5, rat(1)));
    CHECK(family_chebyshev(1) == ExactPoly{0, 1});
    CHECK(family_chebyshev(3) == ExactPoly{0, -3, 0, 4});
    CHECK(family_chebyshev(4) == ExactPoly{1, 0, -8, 0, 8});
    CHECK(family_two_star(2) == ExactPoly{1, 0, -2, 0, 1});
    CHECK_THROWS_AS(family_star(0), DomainError);
    CHECK_THROWS_AS(family_chebyshev(0), DomainError);
    CHECK_THROWS_AS(family_two_star(-1), DomainError);
}

TEST_CASE("valency data") {
    ValencyData vd{{3, 1}, {2, 1, 1}};
    CHECK(vd.edges() == 4);
    CHECK(vd.tree_property());
    CHECK_FALSE(ValencyData{{3, 1}, {2, 1}}.tree_property());
    CHECK(ValencyData{{2, 2}, {2, 1, 1}}.tree_property());  // the four-edge chain
    CHECK_FALSE(ValencyData{{2, 2}, {4}}.tree_property());
    CHECK_FALSE(ValencyData{{4}, {1, 1, 1, 1, 0}}.tree_property());

    Dessin star(Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::identity(3));
    auto sv = tree_valencies(star);
    CHECK(sv.alpha == std::vector<int>{3});
    CHECK(sv.beta == std::vector<int>{1, 1, 1});
}

TEST_CASE("verify on the marked quartic") {
    std::vector<C53> p{0, 0, 0, 4, -1};
    auto sol = verify_shabat<C53>(p);
    CHECK(std::abs(sol.critical_values.first) < 1e-9);
    CHECK(std::abs(sol.critical_values.second - C53(27)) < 1e-7);
    REQUIRE(sol.black.size() == 2);
    REQUIRE(sol.white.size() == 3);
    CHECK(valencies(sol.black) == std::vector<int>{3, 1});
    CHECK(valencies(sol.white) == std::vector<int>{2, 1, 1});
    CHECK(std::abs(sol.black[0].first) < 1e-7);
    CHECK(std::abs(sol.black[1].first - C53(4)) < 1e-7);
    // fibre over 27 sorts as -1-i*sqrt(2), -1+i*sqrt(2), 3
    const double s2 = std::sqrt(2.0);
    CHECK(std::abs(sol.white[0].first - C53(-1, -s2)) < 1e-7);
    CHECK(std::abs(sol.white[1].first - C53(-1, s2)) < 1e-7);
    CHECK(std::abs(sol.white[2].first - C53(3)) < 1e-7);
    CHECK(sol.residual < 1e-9);
}

TEST_CASE("verify corner cases") {
    auto cube = verify_shabat<C53>({0, 0, 0, 1});
    CHECK(std::abs(cube.critical_values.first) < 1e-10);
    CHECK(std::abs(cube.critical_values.second - C53(1)) < 1e-10);
    CHECK(valencies(cube.black) == std::vector<int>{3});
    CHECK(valencies(cube.white) == std::vector<int>{1, 1, 1});

    // x^3 + x has exactly two critical values, the chain with three edges
    auto chain = verify_shabat<C53>({0, 1, 0, 1});
    CHECK(valencies(chain.black) == std::vector<int>{2, 1});
    CHECK(valencies(chain.white) == std::vector<int>{2, 1});
    CHECK(cabs(chain.critical_values.first + chain.critical_values.second) < 1e-9);

    CHECK_THROWS_AS(verify_shabat<C53>({0, 0, 1, 1, 1}), DomainError);
    CHECK_THROWS_AS(verify_shabat<C53>({5}), DomainError);
}

TEST_CASE("families verify to the right valencies") {
    for (int n = 1; n <= 6; ++n) {
        auto star = verify_shabat<C53>(to_c<C53>(family_star(n)));
        std::vector<int> want{n};
        for (int i = 0; i < n; ++i) want.push_back(1);
        std::sort(want.rbegin(), want.rend());
        CHECK(combined_valencies(star) == want);

        auto chain = verify_shabat<C53>(to_c<C53>(family_chebyshev(n)));
        std::vector<int> cw(static_cast<std::size_t>(n - 1), 2);
        cw.push_back(1);
        cw.push_back(1);
        std::sort(cw.rbegin(), cw.rend());
        CHECK(combined_valencies(chain) == cw);

        auto two = verify_shabat<C53>(to_c<C53>(family_two_star(n)));
        std::vector<int> tw{n};
        for (int i = 0; i < n; ++i) tw.push_back(2);
        for (int i = 0; i < n; ++i) tw.push_back(1);
        std::sort(tw.rbegin(), tw.rend());
        CHECK(combined_valencies(two) == tw);
        CHECK(star.residual < 1e-8);
        CHECK(chain.residual < 1e-8);
        CHECK(two.residual < 1e-8);
    }
    // high-degree multiple roots need the wider mantissa
    for (int n = 7; n <= 10; ++n) {
        auto star = verify_shabat<C106>(to_c<C106>(family_star(n)));
        CHECK(valencies(star.black) == std::vector<int>{n});
        auto chain = verify_shabat<C106>(to_c<C106>(family_chebyshev(n)));
        std::vector<int> cw(static_cast<std::size_t>(n - 1), 2);
        cw.push_back(1);
        cw.push_back(1);
        std::sort(cw.rbegin(), cw.rend());
        CHECK(combined_valencies(chain) == cw);
        auto two = verify_shabat<C106>(to_c<C106>(family_two_star(n)));
        std::vector<int> tw{n};
        for (int i = 0; i < n; ++i) tw.push_back(2);
        for (int i = 0; i < n; ++i) tw.push_back(1);
        std::sort(tw.rbegin(), tw.rend());
        CHECK(combined_valencies(two) == tw);
    }
}

TEST_CASE("valencies are affine invariants") {
    std::vector<C53> p{0, 0, 0, 4, -1};
    auto q = precompose_affine(p, C53(2), C53(-1));
    for (auto& c : q) c = c * C53(3);
    q[0] += C53(5);
    auto sp = verify_shabat<C53>(p);
    auto sq = verify_shabat<C53>(q);
    CHECK(valencies(sp.black) == valencies(sq.black));
    CHECK(valencies(sp.white) == valencies(sq.white));
    CHECK(std::abs(sq.critical_values.first - C53(5)) < 1e-7);
}

TEST_CASE("solving the marked quartic tree") {
    ValencyData vd{{3, 1}, {2, 1, 1}};
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 1; s <= 16; ++s) seeds.push_back(s);
    auto sols = solve_shabat<C53>(vd, seeds);
    REQUIRE(!sols.empty());
    for (const auto& sol : sols) {
        CHECK(sol.residual < 1e-12);
        CHECK(valencies(sol.black) == std::vector<int>{3, 1});
        CHECK(valencies(sol.white) == std::vector<int>{2, 1, 1});
        // affine-equivalent to 4x^3 - x^4: rescaling the lone simple black
        // vertex onto 4 must carry the white fibre onto {3, -1+-i*sqrt(2)}
        C53 b = sol.black[0].second == 1 ? sol.black[0].first : sol.black[1].first;
        std::vector<C53> mapped;
        for (const auto& [w, m] : sol.white) mapped.push_back(w * C53(4) / b);
        std::vector<C53> want{C53(3), C53(-1, std::sqrt(2.0)), C53(-1, -std::sqrt(2.0))};
        for (const auto& t : want) {
            bool hit = false;
            for (const auto& w : mapped) hit = hit || std::abs(w - t) < 1e-6;
            CHECK(hit);
        }
    }
    // deterministic in the seed list
    auto again = solve_shabat<C53>(vd, seeds);
    REQUIRE(again.size() == sols.size());
    for (std::size_t i = 0; i < sols.size(); ++i)
        for (std::size_t j = 0; j < sols[i].poly.size(); ++j)
            CHECK(sols[i].poly[j] == again[i].poly[j]);
}

TEST_CASE("solved stars and chains") {
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8};
    auto star = solve_shabat<C53>(ValencyData{{5}, {1, 1, 1, 1, 1}}, seeds);
    REQUIRE(star.size() == 1);
    CHECK(valencies(star[0].black) == std::vector<int>{5});
    CHECK(std::abs(star[0].black[0].first) < 1e-10);
    for (const auto& [w, m] : star[0].white)
        CHECK(std::abs(std::pow(w, 5) - C53(1)) < 1e-9);

    auto chain = solve_shabat<C53>(ValencyData{{1, 1}, {2}}, seeds);
    REQUIRE(chain.size() == 1);
    CHECK(std::abs(std::abs(chain[0].white[0].first) - 1.0) < 1e-10);

    CHECK_THROWS_AS(solve_shabat<C53>(ValencyData{{3, 1}, {2, 1, 1}}, {}), DomainError);
    CHECK_THROWS_AS(solve_shabat<C53>(ValencyData{{2}, {2}}, seeds), DomainError);
}

TEST_CASE("extended precision solve") {
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8};
    auto sols = solve_shabat<C106>(ValencyData{{3, 1}, {2, 1, 1}}, seeds);
    REQUIRE(!sols.empty());
    CHECK(NumTraits<C106>::to_double(sols[0].residual) < 1e-25);
    auto round = verify_shabat<C106>(sols[0].poly);
    CHECK(valencies(round.black) == std::vector<int>{3, 1});
    CHECK(valencies(round.white) == std::vector<int>{2, 1, 1});
}
