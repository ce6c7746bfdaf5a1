#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dessin/annihilator.hpp"

using namespace dessin;

namespace {

template <class C>
std::vector<Series<C>> germs_of(const ExactPoly& p, const C& x0, int terms) {
    return power_series_inverses(poly_to_c<C>(p), x0, terms);
}

// worst residual coefficient of op applied to g, relative to g's magnitude
template <class C>
typename NumTraits<C>::Real germ_residual(const LinDiffOp& op, const Series<C>& g) {
    using R = typename NumTraits<C>::Real;
    Series<C> res = apply_operator(op, g);
    R worst(0), scale(1);
    for (const auto& v : g.a) scale = std::max(scale, cabs(v));
    for (const auto& v : res.a) worst = std::max(worst, cabs(v));
    return worst / scale;
}

}  // namespace

TEST_CASE("inverse derivatives of the square and cube maps") {
    auto r2 = inverse_derivative_rationals(ExactPoly{0, 0, 1}, 2);
    CHECK(r2[0] == RatFun{ExactPoly::constant(rat(1, 2)), ExactPoly::x()});
    CHECK(r2[1] == RatFun{ExactPoly::constant(rat(-1, 4)), ExactPoly{0, 0, 0, 1}});

    auto r3 = inverse_derivative_rationals(ExactPoly{0, 0, 0, 1}, 2);
    CHECK(r3[0] == RatFun{ExactPoly::constant(rat(1, 3)), ExactPoly{0, 0, 1}});
    CHECK(r3[1] ==
          RatFun{ExactPoly::constant(rat(-2, 9)), ExactPoly{0, 0, 0, 0, 0, 1}});
}

TEST_CASE("inverse derivatives are reduced with monic denominators") {
    // p = x^3 - x + 1: r_2 = -6t/(3t^2-1)^3 = (-2/9)t / (t^2 - 1/3)^3
    ExactPoly p{1, -1, 0, 1};
    auto rs = inverse_derivative_rationals(p, 2);
    CHECK(rs[1].num == ExactPoly{0, rat(-2, 9)});
    CHECK(rs[1].den ==
          ExactPoly{rat(-1, 27), 0, rat(1, 3), 0, -1, 0, 1});
}

TEST_CASE("inverse derivatives satisfy the chain-rule recursion") {
    ExactPoly p{3, -1, 2, 0, 1};
    auto rs = inverse_derivative_rationals(p, 4);
    for (int k = 0; k + 1 < 4; ++k) {
        const ExactPoly& n1 = rs[static_cast<std::size_t>(k)].num;
        const ExactPoly& d1 = rs[static_cast<std::size_t>(k)].den;
        const ExactPoly& n2 = rs[static_cast<std::size_t>(k + 1)].num;
        const ExactPoly& d2 = rs[static_cast<std::size_t>(k + 1)].den;
        // r_{k+1} = r_k' / p' cross-multiplied
        CHECK((n1.derivative() * d1 - n1 * d1.derivative()) * d2 ==
              n2 * d1 * d1 * p.derivative());
    }
}

TEST_CASE("inverse derivatives match the germ coefficients") {
    ExactPoly p{0, -1, 0, 1};  // x^3 - x
    auto rs = inverse_derivative_rationals(p, 3);
    auto germs = germs_of<C53>(p, C53(10), 8);
    auto pc = poly_to_c<C53>(p);
    for (const auto& g : germs) {
        C53 t = g.coeff(0);
        CHECK(cabs(poly_eval(pc, t) - C53(10)) < 1e-10);
        double fact = 1;
        for (int k = 1; k <= 3; ++k) {
            fact *= k;
            C53 expect = poly_eval(poly_to_c<C53>(rs[static_cast<std::size_t>(k - 1)].num), t) /
                         poly_eval(poly_to_c<C53>(rs[static_cast<std::size_t>(k - 1)].den), t);
            CHECK(cabs(expect - g.coeff(k) * C53(fact)) < 1e-9 * (1 + cabs(expect)));
        }
    }
}

TEST_CASE("normalization strips scalars, common factors, and fixes the sign") {
    LinDiffOp n = normalize_operator({ExactPoly{}, ExactPoly{0, 0, 6}, ExactPoly{0, 0, 0, 3}});
    CHECK(n.q == std::vector<ExactPoly>{ExactPoly{}, ExactPoly{2}, ExactPoly{0, 1}});
    // a lone coefficient is its own common factor
    CHECK(normalize_operator({ExactPoly{0, 0, -5}}).q ==
          std::vector<ExactPoly>{ExactPoly{1}});
    CHECK_THROWS_AS(normalize_operator({ExactPoly{}, ExactPoly{}}), DomainError);

    CHECK(proportional(LinDiffOp{{ExactPoly{}, ExactPoly{0, 0, -10}, ExactPoly{0, 0, 0, -5}}},
                       LinDiffOp{{ExactPoly{}, ExactPoly{2}, ExactPoly{0, 1}}}));
    CHECK_FALSE(proportional(LinDiffOp{{ExactPoly{1}, ExactPoly{0, 2}}},
                             LinDiffOp{{ExactPoly{1}, ExactPoly{1, 2}}}));
    CHECK(proportional(LinDiffOp{{ExactPoly{}}}, LinDiffOp{{ExactPoly{}, ExactPoly{}}}));
}

TEST_CASE("annihilators of power maps and affine maps") {
    CHECK(fuchsian_annihilator(ExactPoly{0, 0, 1}).q ==
          std::vector<ExactPoly>{ExactPoly{-1}, ExactPoly{0, 2}});
    CHECK(fuchsian_annihilator(ExactPoly{0, 0, 0, 0, 0, 1}).q ==
          std::vector<ExactPoly>{ExactPoly{-1}, ExactPoly{0, 5}});
    CHECK(fuchsian_annihilator(ExactPoly{3, 2}).q ==
          std::vector<ExactPoly>{ExactPoly{-1}, ExactPoly{-3, 1}});
    CHECK(minimal_order(ExactPoly{0, 0, 0, 0, 1}) == 1);
}

TEST_CASE("annihilator of a generic quadratic") {
    // inverses of x^2 + x satisfy (4x+1) y'' + 2 y' = 0
    CHECK(fuchsian_annihilator(ExactPoly{0, 1, 1}).q ==
          std::vector<ExactPoly>{ExactPoly{}, ExactPoly{2}, ExactPoly{1, 4}});
    CHECK(minimal_order(ExactPoly{0, 1, 1}) == 2);
}

TEST_CASE("annihilator of the degree-3 cosine polynomial") {
    // inverses of 4x^3 - 3x satisfy (1-x^2) y'' - x y' + y/9 = 0
    CHECK(fuchsian_annihilator(ExactPoly{0, -3, 0, 4}).q ==
          std::vector<ExactPoly>{ExactPoly{-1}, ExactPoly{0, 9}, ExactPoly{-9, 0, 9}});
}

TEST_CASE("annihilator of the marked quartic") {
    LinDiffOp op = fuchsian_annihilator(ExactPoly{0, 0, 0, 4, -1});
    CHECK(op.q == std::vector<ExactPoly>{ExactPoly{}, ExactPoly{45},
                                         ExactPoly{-1920, 270},
                                         ExactPoly{0, -3456, 208},
                                         ExactPoly{0, 0, -864, 32}});
    // the same operator with every coefficient multiplied by x
    LinDiffOp shifted{{ExactPoly{}, ExactPoly{0, 45}, ExactPoly{0, -1920, 270},
                       ExactPoly{0, 0, -3456, 208}, ExactPoly{0, 0, 0, -864, 32}}};
    CHECK(proportional(op, shifted));
    CHECK(fuchsian_check(op).fuchsian);
    CHECK(fuchsian_check(shifted).fuchsian);

    auto germs = germs_of<C106>(ExactPoly{0, 0, 0, 4, -1}, NumTraits<C106>::make(17), 24);
    CHECK(germs.size() == 4);
    for (const auto& g : germs) CHECK(germ_residual(op, g) < F106("1e-25"));
}

TEST_CASE("penultimate coefficient controls constants in the span") {
    // nonzero penultimate coefficient: branch sum is a nonzero constant, so
    // the full-order annihilator kills constants
    for (ExactPoly p : {ExactPoly{1, -1, 2, 1}, ExactPoly{1, 0, 0, 1, 1}}) {
        LinDiffOp op = fuchsian_annihilator(p);
        CHECK(op.order() == p.degree());
        CHECK(op.q[0].is_zero());
        CHECK(fuchsian_check(op).fuchsian);
    }
    // zero penultimate coefficient: branches sum to zero, the span drops
    for (ExactPoly p : {ExactPoly{0, -1, 0, 1}, ExactPoly{0, 1, 2, 0, 1}}) {
        LinDiffOp op = fuchsian_annihilator(p);
        CHECK(op.order() < p.degree());
        CHECK(fuchsian_check(op).fuchsian);
    }
}

TEST_CASE("annihilators annihilate the inverse germs") {
    for (ExactPoly p : {ExactPoly{0, 1, 1}, ExactPoly{0, -1, 0, 1},
                        ExactPoly{1, -1, 2, 1}, ExactPoly{0, 1, 2, 0, 1}}) {
        LinDiffOp op = fuchsian_annihilator(p);
        auto germs = germs_of<C106>(p, NumTraits<C106>::make(10), 20);
        CHECK(static_cast<int>(germs.size()) == p.degree());
        for (const auto& g : germs) CHECK(germ_residual(op, g) < F106("1e-25"));
    }
}

TEST_CASE("operator application checks the truncation") {
    LinDiffOp op{{ExactPoly{-1}, ExactPoly{0, 2}}};
    auto germs = germs_of<C53>(ExactPoly{0, 0, 1}, C53(1), 12);
    for (const auto& g : germs) CHECK(germ_residual(op, g) < 1e-13);
    Series<C53> tiny = series_from_coeffs(C53(1), {C53(1), C53(2)});
    LinDiffOp second{{ExactPoly{1}, ExactPoly{}, ExactPoly{1}}};
    CHECK_THROWS_AS(apply_operator(second, tiny), DomainError);
}

TEST_CASE("fuchs criterion accepts and rejects correctly") {
    CHECK(fuchsian_check(LinDiffOp{{ExactPoly{-1}, ExactPoly{0, 2}}}).fuchsian);
    CHECK(fuchsian_check(LinDiffOp{{ExactPoly{5}}}).fuchsian);
    // q_0 = 1 does not vanish at the double root of q_1 = x^2
    auto bad1 = fuchsian_check(LinDiffOp{{ExactPoly{1}, ExactPoly{0, 0, 1}}});
    CHECK_FALSE(bad1.fuchsian);
    CHECK(bad1.notes.size() == 1);
    // y' + x y has an irregular point at infinity
    auto bad2 = fuchsian_check(LinDiffOp{{ExactPoly{0, 1}, ExactPoly{1}}});
    CHECK_FALSE(bad2.fuchsian);
    auto zero = fuchsian_check(LinDiffOp{{ExactPoly{}}});
    CHECK_FALSE(zero.fuchsian);
}

TEST_CASE("affine pullback matches the hypergeometric form") {
    // (1-x^2) y'' - x y' + y/16 rewritten through psi(x) = x/2 + 1/2
    LinDiffOp cheb{{ExactPoly::constant(rat(1, 16)), ExactPoly{0, -1}, ExactPoly{1, 0, -1}}};
    LinDiffOp pulled = pullback_affine(cheb, rat(1), rat(0), rat(1, 2), rat(1, 2));
    CHECK(proportional(pulled, LinDiffOp{{ExactPoly::constant(rat(1, 16)),
                                          ExactPoly{rat(1, 2), -1},
                                          ExactPoly{0, 1, -1}}}));
    CHECK(pulled.q == std::vector<ExactPoly>{ExactPoly{-1}, ExactPoly{-8, 16},
                                             ExactPoly{0, -16, 16}});

    // value scale is a no-op; a value shift needs q_0 = 0
    CHECK(pullback_affine(cheb, rat(7), rat(0), rat(1), rat(0)).q ==
          normalize_operator(cheb.q).q);
    CHECK_THROWS_AS(pullback_affine(cheb, rat(1), rat(1), rat(1), rat(0)),
                    std::invalid_argument);
    LinDiffOp noconst{{ExactPoly{}, ExactPoly{2}, ExactPoly{1, 4}}};
    CHECK(pullback_affine(noconst, rat(1), rat(5), rat(1), rat(0)).q == noconst.q);
    CHECK_THROWS_AS(pullback_affine(cheb, rat(1), rat(0), rat(0), rat(0)), DomainError);
}

TEST_CASE("pullback mirrors the argument consistently") {
    LinDiffOp a = fuchsian_annihilator(ExactPoly{0, 1, 1});
    LinDiffOp b = fuchsian_annihilator(ExactPoly{0, -1, -1});
    CHECK(proportional(pullback_affine(a, rat(1), rat(0), rat(-1), rat(0)), b));
}

TEST_CASE("wronskian annihilator recovers the square-map operator") {
    auto germs = germs_of<C53>(ExactPoly{0, 0, 1}, C53(1), 14);
    auto w = wronskian_annihilator(germs, 1e-8, rat(1));
    CHECK(w.order == 1);
    REQUIRE(w.exact.has_value());
    CHECK(w.exact->q == std::vector<ExactPoly>{ExactPoly{-1}, ExactPoly{0, 2}});
    // monic coefficient is -1/(2(1+u))
    CHECK(cabs(w.monic_coeffs[0].coeff(0) - C53(-0.5)) < 1e-12);
    CHECK(cabs(w.monic_coeffs[0].coeff(1) - C53(0.5)) < 1e-12);
}

TEST_CASE("wronskian and exact annihilators agree") {
    for (ExactPoly p : {ExactPoly{0, -1, 0, 1}, ExactPoly{0, 1, 1, 1}}) {
        auto germs = germs_of<C106>(p, NumTraits<C106>::make(10), 26);
        auto w = wronskian_annihilator(germs, F106("1e-12"), rat(10), F106("1e-15"));
        LinDiffOp direct = fuchsian_annihilator(p);
        CHECK(w.order == direct.order());
        REQUIRE(w.exact.has_value());
        CHECK(proportional(*w.exact, direct));
    }
}

TEST_CASE("wronskian annihilator on a single algebraic germ stays numeric") {
    auto germs = germs_of<C106>(ExactPoly{0, -1, 0, 1}, NumTraits<C106>::make(10), 26);
    auto w = wronskian_annihilator(std::vector<Series<C106>>{germs[0]}, F106("1e-12"),
                                   rat(10), F106("1e-15"));
    CHECK(w.order == 1);
    CHECK_FALSE(w.exact.has_value());
}

TEST_CASE("wronskian annihilator needs enough terms") {
    auto germs = germs_of<C53>(ExactPoly{0, -1, 0, 1}, C53(10), 4);
    CHECK_THROWS_AS(wronskian_annihilator(germs, 1e-8), DomainError);
}
