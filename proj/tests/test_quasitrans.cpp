#include <vector>

#include <gtest/gtest.h>

#include <qtrans/qtrans.hpp>

#include "support/printers.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace qtrans {
namespace {

PolyMap M(const char* s, int n) { return parse_map(s, indexed_names(n)); }
Poly P(const char* s, int n) { return parse(s, n); }

const char* kCubicTower = "0; x1; x1^2; x1^3";

TEST(CheckQt, PowerExampleSatisfiesAllConditions)
{
    auto e = catalog::power_example(2);
    QtReport r = check_qt(e.expected);
    EXPECT_TRUE(r.cond_inverse);
    EXPECT_TRUE(r.cond_deform);
    EXPECT_TRUE(r.cond_jhh);
    ASSERT_TRUE(r.nilpotency_index);
    EXPECT_LE(*r.nilpotency_index, 5);
    EXPECT_TRUE(r.series_identity);
}

TEST(CheckQt, ConstantIsTranslation)
{
    QtReport r = check_qt(M("1; -2/3; 5", 3));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.nilpotency_index, 1);
}

TEST(CheckQt, SwapFailsAllConditions)
{
    QtReport r = check_qt(M("x2; x1", 2));
    EXPECT_FALSE(r.cond_inverse);
    EXPECT_FALSE(r.cond_deform);
    EXPECT_FALSE(r.cond_jhh);
    EXPECT_FALSE(r.nilpotency_index);
}

TEST(CheckQt, NonSquareRejected) { EXPECT_THROW(check_qt(PolyMap(3, {P("x1", 3)})), std::invalid_argument); }

TEST(CheckQt, ConditionsAgreeOnRandomMaps)
{
    testing::Random rnd(11);
    for (int k = 0; k < 40; ++k) {
        PolyMap h = rnd.map(3, 3, 2, 3);
        EXPECT_TRUE(check_qt(h).conditions_agree()) << print(h);
    }
}

TEST(QuasiTranslation, RejectsNonExample) { EXPECT_THROW(QuasiTranslation(M("x2; x1", 2)), NotQuasiTranslation); }

TEST(QuasiTranslation, HomogeneousDegree)
{
    EXPECT_EQ(QuasiTranslation(M("0; x1^2; 0", 3)).homogeneous_degree(), 2);
    EXPECT_FALSE(QuasiTranslation(M(kCubicTower, 4)).homogeneous_degree());
    EXPECT_FALSE(QuasiTranslation(M("0; 0", 2)).homogeneous_degree());
}

TEST(QuasiDegree, WorkedExample)
{
    QuasiTranslation qt(M(kCubicTower, 4));
    EXPECT_EQ(quasi_degree(P("x1 + x2*x4 - x3^2", 4), qt), QuasiDegree::of(1));
    EXPECT_EQ(quasi_degree(P("x1", 4), qt), QuasiDegree::of(0));
    EXPECT_TRUE(quasi_degree(Poly(4), qt).is_minus_infinity());
    EXPECT_EQ(quasi_degree(Poly(4), qt).to_string(), "minus infinity");
}

TEST(QuasiDegree, DeformationRecoversAtZero)
{
    QuasiTranslation qt(M(kCubicTower, 4));
    Poly f = P("x2^2 - x1*x3 + 7", 4);
    Poly d = deform(f, qt);
    EXPECT_EQ(t_coefficient(d, 0), f);
}

TEST(QuasiDegree, MatchesFiniteDifferenceOracle)
{
    QuasiTranslation qt(M(kCubicTower, 4));
    testing::Random rnd(5);
    for (int k = 0; k < 30; ++k) {
        Poly f = rnd.nonzero_poly(4, 2, 4);
        int nu = quasi_degree(f, qt).value();
        EXPECT_EQ(nu, testing::degree_by_differences(f, qt.map(), 2 * 3));
        EXPECT_LE(nu, f.degree());
    }
}

TEST(QuasiDegree, ProductLaw)
{
    QuasiTranslation qt(M(kCubicTower, 4));
    testing::Random rnd(7);
    for (int k = 0; k < 100; ++k) {
        Poly f = rnd.nonzero_poly(4, 2, 3), g = rnd.nonzero_poly(4, 2, 3);
        EXPECT_EQ(quasi_degree(f * g, qt), quasi_degree(f, qt) + quasi_degree(g, qt));
    }
    EXPECT_TRUE((QuasiDegree::minus_infinity() + QuasiDegree::of(3)).is_minus_infinity());
}

TEST(Iterate, Examples)
{
    QuasiTranslation qt(M(kCubicTower, 4));
    EXPECT_EQ(iterate(qt, 0), PolyMap::identity(4));
    EXPECT_EQ(iterate(qt, 1), shift(qt.map(), 1));
    PolyMap step = shift(qt.map(), 1);
    EXPECT_EQ(iterate(qt, 3), compose(step, compose(step, step)));
    EXPECT_EQ(iterate(qt, 3), M("x1; x2 + 3*x1; x3 + 3*x1^2; x4 + 3*x1^3", 4));
    for (unsigned m = 0; m <= 5; ++m) EXPECT_NO_THROW(iterate(QuasiTranslation(catalog::power_example().expected), m));
}

TEST(Invariant, Examples)
{
    auto e = catalog::power_example(2);
    QuasiTranslation qt(e.expected);
    EXPECT_TRUE(is_invariant(e.p, qt));
    EXPECT_TRUE(is_invariant(P("x1", 5), qt));
    EXPECT_TRUE(is_invariant(P("x2", 5), qt));
    EXPECT_FALSE(is_invariant(P("x3", 5), qt));
    QuasiTranslation tower(M(kCubicTower, 4));
    EXPECT_FALSE(is_invariant(P("x2", 4), tower));
    EXPECT_TRUE(is_invariant(Poly::constant(4, 3), tower));
}

// f(x + H) = f implies f(x + tH) = f.
TEST(Invariant, ShiftInvarianceExtendsToDeformation)
{
    auto e = catalog::power_example(2);
    QuasiTranslation qt(e.expected);
    testing::Random rnd(3);
    std::vector<Poly> gens = {P("x1", 5), P("x2", 5), e.p};
    for (int k = 0; k < 20; ++k) {
        Poly f = Poly::constant(5, rnd.rational());
        for (const auto& g : gens)
            if (rnd.coin()) f = f * g + Poly::constant(5, rnd.rational());
        ASSERT_EQ(compose(f, shift(qt.map(), 1)), f);
        EXPECT_EQ(deform(f, qt), f.embed(6));
    }
}

TEST(StripGcd, PowerExample)
{
    auto e = catalog::power_example(2);
    StripResult s = strip_gcd(QuasiTranslation(e.expected));
    EXPECT_EQ(s.g, e.p);
    EXPECT_EQ(s.reduced, Rat(2) * M("0; 0; x2^2; -2*x1*x2; x1^2", 5));
}

TEST(StripGcd, CoprimeAndProportional)
{
    PolyMap h = M("0; x1 + 1; x1^2; x1^3", 4);
    StripResult s = strip_gcd(QuasiTranslation(h));
    EXPECT_EQ(s.g, Poly::constant(4, 1));
    EXPECT_EQ(s.reduced, h);

    StripResult p = strip_gcd(QuasiTranslation(M("0; 2*x1^2; -x1^2", 3)));
    EXPECT_EQ(p.g, P("x1^2", 3));
    EXPECT_EQ(p.reduced, M("0; 2; -1", 3));
    EXPECT_THROW(strip_gcd(QuasiTranslation(M("0; 0", 2))), std::invalid_argument);
}

TEST(Conjugate, WorkedExample)
{
    auto e = catalog::conjugation_example();
    PolyMap ht = conjugate(QuasiTranslation(e.h), e.F, e.G);
    EXPECT_EQ(ht, e.expected);
    EXPECT_TRUE(check_qt(ht).passed());
}

TEST(Conjugate, IdentityIsNoOp)
{
    PolyMap h = M(kCubicTower, 4);
    EXPECT_EQ(conjugate(QuasiTranslation(h), PolyMap::identity(4), PolyMap::identity(4)), h);
}

TEST(Conjugate, RejectsNonInverse)
{
    PolyMap h = M("0; x1", 2);
    EXPECT_THROW(conjugate(QuasiTranslation(h), M("x1; x2 + x1", 2), PolyMap::identity(2)), std::invalid_argument);
}

TEST(Conjugate, ReportsQuasiDegreeViolation)
{
    QuasiTranslation qt(M("0; x1", 2));
    try {
        conjugate(qt, M("x1 - x2^2; x2", 2), M("x1 + x2^2; x2", 2));
        FAIL() << "expected a violation";
    } catch (const QuasiDegreeViolation& v) {
        EXPECT_EQ(v.index(), 0);
        EXPECT_EQ(v.nu(), QuasiDegree::of(2));
    }
}

TEST(Conjugate, LinearMatchesFormulaAndIsFunctorial)
{
    testing::Random rnd(21);
    PolyMap h = M(kCubicTower, 4);
    for (int k = 0; k < 10; ++k) {
        RatMatrix t = rnd.unimodular(4), s = rnd.unimodular(4);
        PolyMap ht = conjugate_linear(QuasiTranslation(h), t);
        EXPECT_EQ(ht, matmul(inverse(t), compose(h, linear_map(t))));
        PolyMap hts = conjugate_linear(QuasiTranslation(ht), s);
        EXPECT_EQ(hts, conjugate_linear(QuasiTranslation(h), t * s));
    }
}

TEST(Homogenize, PaddingOnly)
{
    HomogenizeResult r = homogenize(QuasiTranslation(M("0; x1", 2)), 1);
    EXPECT_EQ(r.map, M("0; x1; 0", 3));
    EXPECT_EQ(r.rank_before, 1);
    EXPECT_EQ(r.rank_after, 1);
}

TEST(Homogenize, ConjugationExampleInDimensionFive)
{
    auto e = catalog::conjugation_example();
    QuasiTranslation qt(e.expected);
    HomogenizeResult r = homogenize(qt, e.expected.degree());
    EXPECT_EQ(r.map.arity(), 5);
    QuasiTranslation lifted(r.map);
    EXPECT_EQ(lifted.homogeneous_degree(), e.expected.degree());
    EXPECT_TRUE(check_qt(r.map).passed());
    // Setting x5 = 1 recovers H.
    std::vector<Poly> v;
    for (int i = 0; i < 4; ++i) v.push_back(Poly::variable(4, i));
    v.push_back(Poly::constant(4, 1));
    PolyMap back = compose(r.map, PolyMap(4, v));
    for (int i = 0; i < 4; ++i) EXPECT_EQ(back[i], e.expected[i]);
}

TEST(Homogenize, DegreeTooSmall)
{
    EXPECT_THROW(homogenize(QuasiTranslation(M(kCubicTower, 4)), 2), std::invalid_argument);
}

TEST(HomogVanish, Examples)
{
    EXPECT_TRUE(check_homog_vanish(QuasiTranslation(M("0; 0; x2^2; -2*x1*x2; x1^2", 5))));
    auto six = catalog::paired_rational(1, 1);
    EXPECT_TRUE(check_homog_vanish(QuasiTranslation(six.map)));
    EXPECT_THROW(check_homog_vanish(QuasiTranslation(M("1; 2", 2))), std::invalid_argument);
    EXPECT_THROW(check_homog_vanish(QuasiTranslation(M(kCubicTower, 4))), std::invalid_argument);
}

TEST(Nilpotency, JacobianPowerVanishes)
{
    for (const PolyMap& h : {M(kCubicTower, 4), catalog::power_example(3).expected, catalog::conjugation_example().expected}) {
        PolyMatrix j = jacobian(h);
        EXPECT_TRUE(matrix_power(j, unsigned(h.arity())).is_zero());
        QtReport r = check_qt(h);
        EXPECT_TRUE(r.series_identity);
    }
}

} // namespace
} // namespace qtrans
