#include <hurwitz/suites.hpp>

#include <gtest/gtest.h>

using namespace hurwitz;

namespace {

// Cut 7 takes about a minute on one core; shared by every test below.
const Deg5Run& run()
{
    static const Deg5Run r = deg5_run(RunConfig{});
    return r;
}

const RingPtr<GR>& ring() { return run().Q->ring(); }

GradedClass<GR> cls(const std::string& s) { return parse_class<GR>(s, ring(), std::nullopt); }

} // namespace

TEST(Degree5Triple, ClassesOverSmallBase)
{
    auto tri = deg5_triple_class_suite(GenusMode::symbolic(), 2);
    EXPECT_EQ(tri.rank, 18);
    auto at = [&](const std::string& s) { return parse_class<GR>(s, tri.base->ring, std::nullopt); };
    EXPECT_EQ(tri.T, at("(-6g-24)a1 - 3a2' + 3b2'"));
    EXPECT_EQ(tri.extra, at("(3g^2+24g+48)c2 - 3a1^2 - 3a2 + 3b2"));
    EXPECT_EQ(tri.U, at("(12g+48)a1^2 - (4g+16)b2 - (4g^3+48g^2+192g+256)c2 - 4a1b2' + 4b3'"));
    EXPECT_THROW(deg5_triple_class_suite(GenusMode::symbolic(), 1), RingError);
}

TEST(Degree5Triple, KappaRaw)
{
    auto k2 = deg5_kappa(GenusMode::symbolic(), 2);
    auto want = parse_class<GR>("(6g^2+24g+40)c2 - 6a1^2 + (-7g+2)a2 - 7a1a2' + (2g+2)b2 + 2a1b2' + 5a3' - b3'",
                                k2.ring(), std::nullopt);
    EXPECT_EQ(k2, want);
}

TEST(Degree5, CutTooSmall)
{
    RunConfig c;
    c.cut = 5;
    EXPECT_THROW(deg5_run(c), RingError);
}

TEST(Degree5, SingularIdeal)
{
    const auto& r = run();
    EXPECT_TRUE(r.strict);
    EXPECT_EQ(deg5_all_zero(r).cls, cls("(10g+36)a1 - 7a2' - b2'"));
    EXPECT_EQ(r.Q->dims(), (std::vector<int>{2, 5, 6, 7, 4, 3, 2}));
}

TEST(Degree5, NonInjectivityIdealIsContained)
{
    const auto& r = run();
    ASSERT_EQ(r.ni.size(), 8u);
    for (const auto& c : r.ni) {
        if (c.cls.is_zero()) continue;
        EXPECT_LE(c.cls.max_degree(), 7);
        EXPECT_TRUE(r.Q->contains(c.cls)) << c.label;
    }
}

TEST(Degree5, PresentationRelation)
{
    const auto& Q = *run().Q;
    EXPECT_TRUE(Q.contains(cls("(1064g+3610)a1^3 - 1074a1^2a2' + (-2148g-7272)a1a2 + 2160a2a2' + "
                               "(-1064g^3-10830g^2-36680g-41360)a1c2 + (1074g^2+7272g+12288)a2'c2")));
    EXPECT_FALSE(Q.contains(cls("a1^3")));
}

TEST(Degree5, ReducedClasses)
{
    const auto& Q = *run().Q;
    auto tri = deg5_triple_class_suite(GenusMode::symbolic(), 2);
    auto T = detail::into(tri.T, ring()), U = detail::into(tri.U, ring()), X = detail::into(tri.extra, ring());
    EXPECT_EQ(Q.normal_form(T), Q.normal_form(cls("(24g+84)a1 - 24a2'")));
    EXPECT_EQ(Q.normal_form(U), cls("(156g+468)/5 a1^2 - (108g+216)/5 a2 - 108/5 a1a2' - "
                                    "(52g^3+468g^2+1352g+1248)/5 c2"));
    // The constant term is +144; the printed reference has -144.
    EXPECT_EQ(Q.normal_form(X), cls("12a1^2 - 24a2 - (12g^2+84g+144)c2"));
    EXPECT_NE(Q.normal_form(X), cls("12a1^2 - 24a2 - (12g^2+84g-144)c2"));

    auto k2 = detail::into(deg5_kappa(GenusMode::symbolic(), 2), ring());
    EXPECT_EQ(Q.normal_form(k2), cls("(26/5 g - 32/5)a1^2 - 18/5 a1a2' + (-18/5 g + 184/5)a2 + "
                                     "(-26/15 g^3 + 32/5 g^2 + 1424/15 g + 1032/5)c2"));
}

TEST(Degree5, DegreeOneDeterminant)
{
    const auto& Q = *run().Q;
    auto T = cls("(24g+84)a1 - 24a2'"), D = cls("-(32g+112)a1 + 36a2'");
    auto rep = DeterminantReport::of(determinant(Q.matrix_in_basis(1, {T, D}, {cls("a1"), cls("a2'")})));
    EXPECT_EQ(rep.value.to_string(), "96g+336");
    EXPECT_TRUE(rep.roots.empty());
}

TEST(Degree5, StableRangeSpannedByMonomials)
{
    const auto& Q = *run().Q;
    int d = 7;
    EXPECT_TRUE(Q.spans(d, {cls("a1a2'^6"), cls("a2'^7")}));
}
