#include <hurwitz/parse.hpp>

#include <gtest/gtest.h>

using namespace hurwitz;

TEST(Parse, ClassesWithPrimesAndGenus)
{
    auto R = ring_new<GenusRational>({{"a1", 1}, {"a2'", 1}, {"c2", 2}}, 4);
    auto a1 = R->gen("a1"), a2p = R->gen("a2'");
    auto x = parse_class("(8g+12)a1 - 9a2'", R);
    EXPECT_EQ(x, a1 * (GenusRational::g() * GenusRational(8) + GenusRational(12)) - a2p.scaled(GenusRational(9)));
    EXPECT_EQ(parse_class("a1a2' + 1/2 a2'^2", R), a1 * a2p + (a2p * a2p).scaled(GenusRational(Rational(1, 2))));
    EXPECT_EQ(parse_class("3 a2\xE2\x80\xB2 \xE2\x88\x92 a1", R), a2p.scaled(GenusRational(3)) - a1);
    EXPECT_EQ(parse_class("(8g+12)a1", R, 2), a1.scaled(GenusRational(28)));
    EXPECT_THROW(parse_class("a3", R), ParseError);
    EXPECT_THROW(parse_class("a1 / a1", R), ParseError);
    EXPECT_THROW(parse_class("(a1", R), ParseError);
}

TEST(Parse, RationalCoefficientsNeedFixedGenus)
{
    auto R = ring_new<Rational>({{"a1", 1}}, 3);
    EXPECT_THROW(parse_class<Rational>("g a1", R), ParseError);
    EXPECT_EQ(parse_class<Rational>("g a1", R, 5), R->gen("a1").scaled(Rational(5)));
}

TEST(Parse, GenusRationals)
{
    auto q = parse_genus_rational("(2g^3-32g^2+138g-12)/(3g^3+18g^2+33g+18)");
    EXPECT_EQ(q.eval(Rational(1)), Rational(4, 3));
    EXPECT_EQ(parse_genus_rational("44/(g+1)"), GenusRational(44) / (GenusRational::g() + GenusRational(1)));
    EXPECT_EQ(parse_genus_rational("-(g^2+4g+3)/(g+1)"), -(GenusRational::g() + GenusRational(3)));
}
