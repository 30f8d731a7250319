#include <hurwitz/gring.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hurwitz;

namespace {

using Q = Rational;

GradedClass<Q> random_class(const RingPtr<Q>& R, std::mt19937& rng, int maxdeg)
{
    std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
    TermMap<Q> acc;
    for (int k = 0; k < 6; ++k) {
        Monomial m;
        for (int i = 0; i < R->ngens(); ++i) m.e[i] = static_cast<std::uint8_t>(e(rng));
        if (R->degree(m) > maxdeg || !R->keeps(m)) continue;
        acc[m] += Q(c(rng));
    }
    return GradedClass<Q>::from_map(R, std::move(acc));
}

} // namespace

TEST(Ring, TruncationAndDegrees)
{
    auto R = ring_new<Q>({{"x", 1}, {"y", 2}}, 4);
    auto x = R->gen("x"), y = R->gen("y");
    EXPECT_TRUE((x.pow(5)).is_zero());
    EXPECT_EQ((x * y).max_degree(), 3);
    EXPECT_TRUE((y * y * x).is_zero());
    EXPECT_THROW(x.graded_part(5), RingError);
    EXPECT_THROW(ring_new<Q>({{"x", 1}, {"x", 2}}, 3), RingError);
}

TEST(Ring, RewriteRulesConfluent)
{
    // x^2 = -c, y^3 = -a y^2 - b y: the result must not depend on grouping.
    auto base = ring_new<Q>({{"a", 1}, {"b", 2}, {"c", 2}}, 6);
    auto d1 = Ring<Q>::extend(base, {{"x", 1}}, 7);
    auto r1 = Ring<Q>::with_rules(d1, {{"x", 2, -d1->gen("c")}});
    auto d2 = Ring<Q>::extend(r1, {{"y", 1}}, 9);
    auto y = d2->gen("y");
    auto rhs = -(d2->gen("a") + d2->gen("x")) * y * y - d2->gen("b") * y;
    auto R = Ring<Q>::with_rules(d2, {{"y", 3, rhs}});
    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
        auto p = random_class(R, rng, 4), q = random_class(R, rng, 4), s = random_class(R, rng, 4);
        EXPECT_EQ((p * q) * s, p * (q * s));
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ(p * (q + s), p * q + p * s);
    }
    auto X = R->gen("x"), Y = R->gen("y");
    EXPECT_EQ(X * X, -R->gen("c"));
    EXPECT_EQ(Y.pow(4), (Y * Y) * (Y * Y));
}

TEST(Ring, LevelCuts)
{
    auto base = ring_new<Q>({{"a", 1}}, 2);
    auto up = Ring<Q>::extend(base, {{"t", 1}}, 5);
    auto a = up->gen("a"), t = up->gen("t");
    EXPECT_TRUE(a.pow(3).is_zero());
    EXPECT_FALSE((a * a * t * t).is_zero());
    EXPECT_TRUE((a * a * a * t).is_zero());
}

TEST(Ring, SubstitutionIsHomomorphism)
{
    auto S = ring_new<Q>({{"u", 1}, {"v", 2}}, 6);
    auto T = ring_new<Q>({{"p", 1}, {"q", 1}}, 6);
    std::map<std::string, GradedClass<Q>> img{{"u", T->gen("p") + T->gen("q")},
                                              {"v", T->gen("p") * T->gen("q")}};
    std::mt19937 rng(3);
    for (int it = 0; it < 40; ++it) {
        auto a = random_class(S, rng, 3), b = random_class(S, rng, 3);
        auto lhs = class_substitute<Q, Q>(a * b, img, T);
        auto rhs = class_substitute<Q, Q>(a, img, T) * class_substitute<Q, Q>(b, img, T);
        EXPECT_EQ(lhs, rhs);
    }
    std::map<std::string, GradedClass<Q>> bad{{"u", T->gen("p") * T->gen("q")}};
    auto u = S->gen("u");
    EXPECT_THROW(class_substitute(u, bad, T), RingError);
}

TEST(Ring, JsonRoundTrip)
{
    auto R = ring_new<GenusRational>({{"a1", 1}, {"c2", 2}}, 4);
    auto x = R->gen("a1") * GenusRational::g() + R->gen("c2").scaled(GenusRational(Q(3, 2)));
    EXPECT_EQ(GradedClass<GenusRational>::from_json(R, x.to_json()), x);
}
