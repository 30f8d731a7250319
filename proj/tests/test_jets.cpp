#include <hurwitz/jets.hpp>

#include <gtest/gtest.h>

using namespace hurwitz;

namespace {

using Q = Rational;

struct Lines {
    SpacePtr<Q> S;
    GradedClass<Q> w, v, x, y;
};

Lines lines(int cut = 5)
{
    Lines L;
    L.S = base_new<Q>(GenusMode::symbolic(), {{"w", 1}, {"v", 1}, {"x", 1}, {"y", 1}}, cut);
    L.w = L.S->gen("w");
    L.v = L.S->gen("v");
    L.x = L.S->gen("x");
    L.y = L.S->gen("y");
    return L;
}

GradedClass<Q> total(const SpacePtr<Q>& S, const std::vector<GradedClass<Q>>& roots)
{
    auto acc = S->one();
    for (const auto& r : roots) acc = acc * (S->one() + r);
    return acc;
}

} // namespace

TEST(Diagrams, Admissibility)
{
    EXPECT_TRUE(diagram_admissible(full_triangle(3)));
    EXPECT_EQ(full_triangle(2).size(), 6u);
    EXPECT_TRUE(diagram_admissible({{0, 0}, {1, 0}, {0, 1}, {2, 0}}));
    // x^2 needs y.
    EXPECT_FALSE(diagram_admissible({{0, 0}, {1, 0}, {2, 0}}));
    EXPECT_FALSE(diagram_admissible({{1, 0}}));
    EXPECT_FALSE(diagram_admissible({{0, -1}}));
    EXPECT_TRUE(diagram_admissible({{0, 0}, {0, 1}, {0, 2}}));
}

TEST(Jets, FullJetOfLineBundles)
{
    auto L = lines();
    auto W = direct_sum(line_bundle(L.S, L.w), line_bundle(L.S, L.v));
    auto O = line_bundle(L.S, L.x);
    auto J = jet_full(3, W, O);
    EXPECT_EQ(J.rank, 8);
    std::vector<GradedClass<Q>> roots;
    for (int i = 0; i <= 3; ++i) {
        roots.push_back(L.w + L.x.scaled(Q(i)));
        roots.push_back(L.v + L.x.scaled(Q(i)));
    }
    EXPECT_EQ(J.chern, total(L.S, roots));
    EXPECT_THROW(jet_full(-1, W, O), RingError);
}

TEST(Jets, FullJetRankWithHigherRankCotangent)
{
    auto L = lines();
    auto W = line_bundle(L.S, L.w);
    auto O = direct_sum(line_bundle(L.S, L.x), line_bundle(L.S, L.y));
    // 1 + 2 + 3 monomials of degree <= 2 in two variables.
    EXPECT_EQ(jet_full(2, W, O).rank, 6);
}

TEST(Jets, DirectionalJet)
{
    auto L = lines();
    auto W = line_bundle(L.S, L.w);
    auto Ox = line_bundle(L.S, L.x), Oy = line_bundle(L.S, L.y);
    Diagram S{{0, 0}, {1, 0}, {0, 1}, {2, 0}};
    auto J = jet_directional(S, W, Ox, Oy);
    EXPECT_EQ(J.rank, 4);
    EXPECT_EQ(J.chern, total(L.S, {L.w, L.w + L.x, L.w + L.y, L.w + L.x.scaled(Q(2))}));
    EXPECT_THROW(jet_directional(Diagram{{0, 0}, {2, 0}}, W, Ox, Oy), RingError);
}

TEST(Jets, MixedJet)
{
    auto L = lines();
    auto W = line_bundle(L.S, L.w), Wq = line_bundle(L.S, L.v);
    auto Ox = line_bundle(L.S, L.x), Oy = line_bundle(L.S, L.y);
    MixedDiagram M{{{0, 0}, {1, 0}}, {{0, 0}, {1, 0}, {0, 1}, {2, 0}}};
    auto J = jet_mixed(M, W, Wq, Ox, Oy);
    EXPECT_EQ(J.chern, total(L.S, {L.w, L.w + L.x, L.v + L.y, L.v + L.x.scaled(Q(2))}));
    EXPECT_EQ(top_chern_of_pieces(jet_mixed_pieces(M, W, Wq, Ox, Oy), L.S), J.top());

    MixedDiagram bad{{{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}};
    EXPECT_THROW(jet_mixed(bad, W, Wq, Ox, Oy), RingError);
}

TEST(Jets, TopChernOfPiecesMatchesDirectSum)
{
    auto L = lines(6);
    auto W = direct_sum(line_bundle(L.S, L.w), line_bundle(L.S, L.v));
    auto Ox = line_bundle(L.S, L.x), Oy = line_bundle(L.S, L.y);
    auto S = full_triangle(1);
    auto pieces = jet_directional_pieces(S, W, Ox, Oy);
    EXPECT_EQ(top_chern_of_pieces(pieces, L.S), jet_directional(S, W, Ox, Oy).top());
}
