#include <hurwitz/suites.hpp>

#include <gtest/gtest.h>

using namespace hurwitz;

namespace {

const Deg4Run& run()
{
    static const Deg4Run r = deg4_run(RunConfig{});
    return r;
}

GradedClass<GR> cls(const std::string& s) { return parse_class<GR>(s, run().R, std::nullopt); }

} // namespace

TEST(Degree4, GeneratorCountAndFirst)
{
    const auto& r = run();
    ASSERT_EQ(r.gens.size(), 18u);
    EXPECT_EQ(r.gens[0].index, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(detail::into(r.gens[0].cls, r.R), cls("(8g+20)a1 - 8a2' - b2'"));
    for (const auto& g : r.gens)
        for (const auto& [m, q] : g.cls.terms()) EXPECT_TRUE(q.is_polynomial()) << g.label;
}

TEST(Degree4, QuotientDims)
{
    const auto& Q = *run().Q;
    EXPECT_TRUE(run().strict);
    EXPECT_EQ(Q.dims(), (std::vector<int>{2, 4, 3, 2, 1, 1, 1, 1}));
}

TEST(Degree4, PresentationRelationsInIdeal)
{
    const auto& Q = *run().Q;
    for (const auto& s : {"(2g^3+9g^2+10g)a1^3 - (8g^2+24g+8)a1 a3'",
                          "(12g^3+42g^2+36g)a1^2 a2' - (22g^3+121g^2+187g+66)a1 a3' - (24g^2+24g)a2' a3'"})
        EXPECT_TRUE(Q.contains(cls(s))) << s;
    EXPECT_FALSE(Q.contains(cls("a1^3")));
}

TEST(Degree4, KappaAndUClasses)
{
    const auto& r = run();
    const auto& Q = *r.Q;
    auto k1 = detail::into(deg4_kappa(GenusMode::symbolic(), 1), r.R);
    EXPECT_EQ(Q.normal_form(k1), Q.normal_form(cls("(12g+24)a1 - 12a2'")));
    auto k2 = detail::into(deg4_kappa(GenusMode::symbolic(), 2), r.R);
    EXPECT_EQ(k2, cls("a1b2' - 6a1a2' + (6g+6)a1^2 - (6g-6)a2 + (g-3)b2 - (2g^3+6g^2+6g-14)c2 + 4a3'"));

    auto U = detail::into(deg4_U(r.T), r.R);
    EXPECT_EQ(U, cls("4a3'"));
    // The quartic representative agrees modulo the ideal only.
    auto quartic = cls("36a1a2' - (32g+80)a1^2 + (4g+4)a2 - (4g+4)b2");
    EXPECT_NE(quartic, U);
    EXPECT_TRUE(Q.contains(quartic - U));

    EXPECT_EQ(Q.normal_form(cls("c2")),
              cls("3/(g^2+4g+3) a1^2 - 8/(g^3+6g^2+11g+6) a3'"));
}

TEST(Degree4, KappaPowersAreMultiplesOfTopMonomial)
{
    const auto& Q = *run().Q;
    auto k1 = cls("(12g+24)a1 - 12a2'");
    for (int i = 5; i <= 8; ++i) {
        std::vector<GradedClass<GR>> v{k1.pow(i)};
        EXPECT_EQ(Q.span_rank(i, v), 1) << i;
    }
}

TEST(Degree4, FixedGenusMatchesSpecialization)
{
    auto T5 = deg4_tower(GenusMode::at(5), 6);
    auto I5 = deg4_ideal(T5);
    const auto& r = run();
    ASSERT_EQ(I5.size(), r.gens.size());
    for (std::size_t n = 0; n < I5.size(); n += 5)
        EXPECT_EQ(I5[n].cls.to_string(), specialize_class(r.gens[n].cls, 5).to_string()) << r.gens[n].label;
}

TEST(Degree4, ThreadCountDoesNotChangeGenerators)
{
    auto T = deg4_tower(GenusMode::symbolic(), 6);
    auto a = deg4_ideal(T, 1), b = deg4_ideal(T, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        EXPECT_EQ(a[n].label, b[n].label);
        EXPECT_EQ(a[n].cls, b[n].cls);
    }
}

TEST(Degree4, SpanningDeterminantsHaveNoLargeRoots)
{
    const auto& Q = *run().Q;
    auto T = cls("(24g+60)a1 - 24a2'"), D = cls("(-32g-80)a1 + 36a2'");
    auto k1 = cls("(12g+24)a1 - 12a2'");
    auto rep1 = DeterminantReport::of(determinant(Q.matrix_in_basis(1, {T, D}, {cls("a1"), cls("a2'")})));
    EXPECT_TRUE(rep1.nonvanishing());
    // kappa1 = -D/3 at g = 2, so T kappa1 and T D become proportional there.
    auto U = cls("4a3'");
    auto rep2 = DeterminantReport::of(determinant(Q.matrix_in_basis(
        2, {T * k1, D * k1, T * D, U}, {cls("a1^2"), cls("a1a2'"), cls("a2'^2"), cls("a3'")})));
    EXPECT_EQ(rep2.roots, (std::set<long>{2}));
    EXPECT_TRUE(rep2.poles.empty());
}
