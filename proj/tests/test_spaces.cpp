#include <hurwitz/spaces.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hurwitz;

namespace {

using Q = Rational;

SpacePtr<Q> point(int cut = 1) { return base_new<Q>(GenusMode::symbolic(), {}, cut); }

Q integral(const SpacePtr<Q>& top, const SpacePtr<Q>& pt, const GradedClass<Q>& a)
{
    return pushforward(top, pt, a).constant_term();
}

} // namespace

TEST(Grassmannian, G24Numbers)
{
    auto pt = point();
    auto G = grass2_bundle(pt, trivial_bundle(pt, 4));
    auto s1 = G->tautological("sigma1"), s2 = G->tautological("sigma2");
    EXPECT_EQ(integral(G, pt, s1.pow(4)), Q(2));
    EXPECT_EQ(integral(G, pt, s2 * s2), Q(1));
    EXPECT_EQ(integral(G, pt, s1 * s1 * s2), Q(1));
    EXPECT_EQ(integral(G, pt, rel_tangent(G, pt).top()), Q(6));
}

TEST(Grassmannian, G25Numbers)
{
    auto pt = point();
    auto G = grass2_bundle(pt, trivial_bundle(pt, 5));
    auto s1 = G->tautological("sigma1"), s3 = G->tautological("sigma3");
    EXPECT_EQ(integral(G, pt, s1.pow(6)), Q(5));
    EXPECT_EQ(integral(G, pt, s3 * s3), Q(1));
    EXPECT_EQ(integral(G, pt, rel_tangent(G, pt).top()), Q(10));
}

TEST(Grassmannian, SubQuotientSplitE)
{
    auto B = base_new<Q>(GenusMode::symbolic(), {{"e1", 1}, {"e2", 2}, {"e3", 3}, {"e4", 4}}, 4);
    auto E = bundle_from_classes(B, {B->gen("e1"), B->gen("e2"), B->gen("e3"), B->gen("e4")});
    auto G = grass2_bundle(B, E);
    auto sum = direct_sum(grass_sub(G), grass_quot(G));
    EXPECT_EQ(sum.chern, pull_bundle(E, G).chern);
    // Lambda^2 of the tautological subbundle is O(-1) in the Plucker embedding.
    EXPECT_EQ(det(grass_sub(G)).c(1), -(G->gen("h1") + G->gen("h2")));
}

TEST(ProjectiveBundle, SegreClasses)
{
    auto B = base_new<Q>(GenusMode::symbolic(), {{"c1", 1}, {"c2", 2}, {"c3", 3}}, 3);
    auto E = bundle_from_classes(B, {B->gen("c1"), B->gen("c2"), B->gen("c3")});
    auto P = proj_bundle(B, E);
    auto z = P->gen("zeta");
    auto c1 = B->gen("c1"), c2 = B->gen("c2"), c3 = B->gen("c3");
    EXPECT_EQ(pushforward(P, B, z * z), B->one());
    EXPECT_EQ(pushforward(P, B, z.pow(3)), -c1);
    EXPECT_EQ(pushforward(P, B, z.pow(4)), c1 * c1 - c2);
    EXPECT_EQ(pushforward(P, B, z.pow(5)), -c1.pow(3) + c1 * c2.scaled(Q(2)) - c3);
    EXPECT_EQ(pushforward(P, B, rel_tangent(P, B).top()), B->one().scaled(Q(3)));
}

TEST(ProjectiveBundle, P1Bundle)
{
    auto B = base_new<Q>(GenusMode::symbolic(), {{"a", 1}}, 4);
    auto P = p1_bundle(B);
    auto z = P->gen("z");
    auto c2 = P->parent->gen("c2");
    EXPECT_EQ(pushforward(P, P->parent, z.pow(3)), -c2);
    EXPECT_EQ(pushforward(P, P->parent, z), P->parent->one());
    EXPECT_EQ(rel_cotangent(P, P->parent).c(1), z.scaled(Q(-2)));
}

TEST(Towers, ProjectionFormulaRandom)
{
    auto B = base_new<Q>(GenusMode::symbolic(), {{"a", 1}, {"b", 2}}, 5);
    auto E = bundle_from_classes(B, {B->gen("a"), B->gen("b"), B->gen("a") * B->gen("b")});
    auto P = proj_bundle(B, E);
    auto G = grass2_bundle(P, direct_sum(rel_tangent(P, B), line_bundle(P, P->gen("zeta"))));
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-3, 3), e(0, 3);
    std::vector<GradedClass<Q>> up{G->gen("h1"), G->gen("h2"), P->gen("zeta")};
    std::vector<GradedClass<Q>> down{B->gen("a"), B->gen("b")};
    for (int it = 0; it < 100; ++it) {
        auto x = G->one().scaled(Q(c(rng)));
        for (const auto& u : up) x = x * (G->one() + u.pow(e(rng)).scaled(Q(c(rng))));
        auto b = B->one().scaled(Q(c(rng)));
        for (const auto& d : down) b = b + d.pow(e(rng)).scaled(Q(c(rng)));
        EXPECT_EQ(pushforward(G, B, x * b), pushforward(G, B, x) * b);
    }
}
