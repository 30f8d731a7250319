#include <hurwitz/coeffs.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hurwitz;

namespace {

GenusPoly P(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return GenusPoly(v);
}

GenusRational random_gr(std::mt19937& rng)
{
    std::uniform_int_distribution<long> d(-5, 5);
    auto poly = [&](int deg) {
        std::vector<Rational> v;
        for (int i = 0; i <= deg; ++i) v.emplace_back(d(rng));
        return GenusPoly(v);
    };
    GenusPoly den = poly(1);
    if (den.is_zero()) den = GenusPoly(1);
    return GenusRational::normalize(poly(2), den);
}

} // namespace

TEST(GenusPoly, ArithmeticAndEval)
{
    auto p = P({1, 2});      // 1 + 2g
    auto q = P({-3, 0, 1});  // g^2 - 3
    EXPECT_EQ((p * q).eval(2), Rational(5));
    EXPECT_EQ((p + q).to_string(), "g^2+2g-2");
    auto [quo, rem] = GenusPoly::divmod(q, P({-1, 1}));
    EXPECT_EQ(quo, P({1, 1}));
    EXPECT_EQ(rem, GenusPoly(-2));
}

TEST(GenusPoly, IntegerRoots)
{
    auto p = P({-6, 11, -6, 1});  // (g-1)(g-2)(g-3)
    EXPECT_EQ(p.integer_roots(2), (std::set<long>{2, 3}));
    EXPECT_TRUE(P({240, 96}).integer_roots(2).empty());
    EXPECT_EQ(P({-10, 5}).integer_roots(2), (std::set<long>{2}));
}

TEST(GenusRational, CanonicalForm)
{
    auto x = GenusRational::normalize(P({2, 2}), P({3, 3}));
    EXPECT_TRUE(x.is_constant());
    EXPECT_EQ(x.constant(), Rational(2, 3));
    auto y = GenusRational::normalize(P({1}), P({-2, -4}));
    EXPECT_EQ(y.den(), P({1, 2}));
    EXPECT_EQ(y.num(), GenusPoly(Rational(-1, 2)));
    EXPECT_THROW(y.eval(Rational(-1, 2)), ArithmeticError);
    EXPECT_THROW(GenusRational(1) / GenusRational(0), ArithmeticError);
}

TEST(GenusRational, FieldAxiomsRandom)
{
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        auto a = random_gr(rng), b = random_gr(rng), c = random_gr(rng);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a * b, b * a);
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
        EXPECT_EQ(a - a, GenusRational(0));
        Rational g0(7);
        if (sgn(b.den().eval(g0)) != 0 && sgn(a.den().eval(g0)) != 0)
            EXPECT_EQ((a + b).eval(g0), a.eval(g0) + b.eval(g0));
    }
}

TEST(GenusRational, JsonRoundTrip)
{
    auto x = GenusRational::normalize(P({2, 138, -32, 2}), P({18, 33, 18, 3}));
    EXPECT_EQ(GenusRational::from_json(x.to_json()), x);
}
