#include <hurwitz/ideals.hpp>
#include <hurwitz/parse.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hurwitz;

namespace {

using GR = GenusRational;

/// Rank of I_d computed directly from all monomial multiples of the generators.
int brute_rank(const RingPtr<GR>& R, const std::vector<GradedClass<GR>>& gens, int d)
{
    std::vector<int> all;
    for (int i = 0; i < R->ngens(); ++i) all.push_back(i);
    auto cols = monomials_of_degree(*R, all, d);
    absl::flat_hash_map<Monomial, int, MonomialHash> ix;
    for (std::size_t j = 0; j < cols.size(); ++j) ix[cols[j]] = static_cast<int>(j);
    Echelon<GR> E(static_cast<int>(cols.size()));
    for (const auto& f : gens) {
        int e = d - f.min_degree();
        if (e < 0) continue;
        for (const auto& m : monomials_of_degree(*R, all, e)) {
            auto p = f * GradedClass<GR>::monomial(R, m);
            std::vector<GR> row(cols.size(), GR(0));
            for (const auto& [mm, c] : p.terms()) row[ix.at(mm)] = c;
            E.insert(row);
        }
    }
    return E.rank();
}

} // namespace

TEST(Ideals, SmallPresentation)
{
    auto R = ring_new<GR>({{"x", 1}, {"y", 1}, {"z", 1}}, 5);
    std::vector<GradedClass<GR>> I{parse_class("z - x - y", R), parse_class("x^2 - y^2", R)};
    auto Q = GradedQuotient<GR>::build(R, I, std::vector<std::string>{"x", "y"}, 5);
    EXPECT_EQ(Q.dims(), (std::vector<int>{2, 2, 2, 2, 2}));
    EXPECT_EQ(Q.rank(2), 4);
    EXPECT_TRUE(Q.contains(parse_class("z^2 - 2x y - 2y^2", R)));
    EXPECT_FALSE(Q.contains(parse_class("x y", R)));
    EXPECT_THROW(GradedQuotient<GR>::build(R, I, std::vector<std::string>{"x"}, 3), RingError);
    auto nf = Q.normal_form(parse_class("z^2", R));
    EXPECT_EQ(Q.normal_form(nf), nf);
}

TEST(Ideals, EliminationMatchesBruteForceRandom)
{
    auto R = ring_new<GR>({{"a", 1}, {"b", 1}, {"c", 2}, {"d", 2}, {"e", 3}}, 5);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coef(-3, 3), pick(0, 2);
    std::vector<std::string> deg1{"a", "b"}, deg2{"a^2", "a b", "b^2", "c", "d"},
        deg3{"a^3", "a c", "b d", "e", "a b^2", "b c"};
    for (int it = 0; it < 12; ++it) {
        std::vector<GradedClass<GR>> gens;
        auto rnd = [&](const std::vector<std::string>& mons) {
            GradedClass<GR> f(R);
            for (const auto& m : mons) f += parse_class(m, R).scaled(GR(coef(rng)));
            return f;
        };
        for (int k = pick(rng); k > 0; --k) gens.push_back(rnd(deg2));
        for (int k = pick(rng) + 1; k > 0; --k) gens.push_back(rnd(deg3));
        if (pick(rng) == 0) gens.push_back(rnd(deg1));
        auto Q = GradedQuotient<GR>::build(R, gens, std::nullopt, 5);
        for (int d = 1; d <= 5; ++d) EXPECT_EQ(Q.rank(d), brute_rank(R, gens, d)) << "degree " << d;
        // Normal forms are idempotent and additive.
        auto x = parse_class("a^2 c + e b", R), y = parse_class("d a b + c^2 a", R);
        EXPECT_EQ(Q.normal_form(x + y), Q.normal_form(x) + Q.normal_form(y));
    }
}

TEST(Ideals, ExpressAndDeterminant)
{
    auto R = ring_new<GR>({{"x", 1}, {"y", 1}}, 3);
    auto Q = GradedQuotient<GR>::build(R, {}, std::nullopt, 3);
    std::vector<GradedClass<GR>> B{R->gen("x"), R->gen("y")};
    std::vector<GradedClass<GR>> S{parse_class("(g+1)x + y", R), parse_class("x - (g-3) y", R)};
    auto M = Q.matrix_in_basis(1, S, B);
    auto det = determinant(M);
    EXPECT_EQ(det, parse_genus_rational("-(g+1)(g-3) - 1"));
    auto rep = DeterminantReport::of(det);
    EXPECT_EQ(rep.primitive.to_string(), "g^2-2g-2");
    EXPECT_EQ(rep.scalar, Rational(-1));
    EXPECT_TRUE(rep.nonvanishing());
    auto rep2 = DeterminantReport::of(parse_genus_rational("(96g+240)(g-5)"));
    EXPECT_EQ(rep2.roots, (std::set<long>{5}));
    auto x = Q.express(1, parse_class("2x", R), S);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(Q.normal_form(S[0].scaled((*x)[0]) + S[1].scaled((*x)[1])), parse_class("2x", R));
}
