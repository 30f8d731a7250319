#pragma once

#include "bundles.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hurwitz {

struct GenusMode {
    std::optional<long> fixed;  // empty means symbolic g
    static GenusMode symbolic() { return {}; }
    static GenusMode at(long g) { return {g}; }
};

/// Base node: free graded ring on the given generators.
template <class C = GenusRational>
SpacePtr<C> base_new(GenusMode mode, const std::vector<Generator>& gens, int cut)
{
    auto s = std::make_shared<Space<C>>();
    s->kind = SpaceKind::Base;
    s->ring = Ring<C>::make(gens, cut);
    s->genus = mode.fixed;
    return s;
}

/// Universal P^1-bundle P(V) with c1(V) = 0: adds z with z^2 = -c2.
template <class C>
SpacePtr<C> p1_bundle(SpacePtr<C> S, const std::string& zname = "z")
{
    if (!S->ring->has("c2")) {
        if (S->kind != SpaceKind::Base) throw RingError("P^1-bundle needs c2 on its base");
        auto gens = S->ring->generators();
        gens.push_back({"c2", 2});
        auto nb = std::make_shared<Space<C>>(*S);
        nb->ring = Ring<C>::make(gens, S->ring->cut());
        nb->taut.clear();
        S = nb;
    }
    auto draft = Ring<C>::extend(S->ring, {{zname, 1}}, S->ring->cut() + 1);
    auto rhs = -draft->gen("c2");
    auto ring = Ring<C>::with_rules(draft, {{zname, 2, rhs}});
    auto s = std::make_shared<Space<C>>();
    s->kind = SpaceKind::P1;
    s->parent = S;
    s->ring = ring;
    s->reldim = 1;
    s->new_gens = {zname};
    s->rank = 2;
    s->genus = S->genus;
    s->taut.emplace(zname, ring->gen(zname));
    return s;
}

/// Projective bundle of lines in E: zeta = c1(O(1)),
/// zeta^r + c1(E) zeta^{r-1} + ... + c_r(E) = 0.
template <class C>
SpacePtr<C> proj_bundle(const SpacePtr<C>& S, const VBundle<C>& E0, const std::string& name = "zeta")
{
    if (E0.is_virtual) throw RingError("projectivization of a virtual class");
    VBundle<C> E = pull_bundle(E0, S);
    int r = E.rank;
    if (r < 2) throw RingError("projective bundle needs rank at least 2");
    auto draft = Ring<C>::extend(S->ring, {{name, 1}}, S->ring->cut() + r - 1);
    auto x = draft->gen(name);
    GradedClass<C> rhs(draft), xp = draft->one();
    for (int i = r; i >= 1; --i) {
        rhs -= E.c(i).pulled(draft) * xp;
        xp = xp * x;
    }
    auto ring = Ring<C>::with_rules(draft, {{name, r, rhs}});
    auto s = std::make_shared<Space<C>>();
    s->kind = SpaceKind::Proj;
    s->parent = S;
    s->ring = ring;
    s->reldim = r - 1;
    s->new_gens = {name};
    s->rank = r;
    s->genus = S->genus;
    s->taut.emplace(name, ring->gen(name));
    s->taut.emplace("c(E)", E.chern.pulled(ring));
    return s;
}

/// Grassmann bundle of 2-planes in E, modelled by its flag bundle.
template <class C>
SpacePtr<C> grass2_bundle(const SpacePtr<C>& S, const VBundle<C>& E0, const std::string& h1 = "h1",
                          const std::string& h2 = "h2")
{
    if (E0.is_virtual) throw RingError("Grassmannian of a virtual class");
    VBundle<C> E = pull_bundle(E0, S);
    int r = E.rank;
    if (r < 3) throw RingError("Grassmann bundle G(2,E) needs rank at least 3");
    auto draft = Ring<C>::extend(S->ring, {{h1, 1}, {h2, 1}}, S->ring->cut() + 2 * r - 3);
    auto x = draft->gen(h1), y = draft->gen(h2);
    std::vector<GradedClass<C>> ce;
    for (int i = 0; i <= r; ++i) ce.push_back(E.c(i).pulled(draft));
    GradedClass<C> rhs1(draft), xp = draft->one();
    for (int i = r; i >= 1; --i) {
        rhs1 -= ce[i] * xp;
        xp = xp * x;
    }
    // c(E/L1) = c(E) / (1 - h1)
    std::vector<GradedClass<C>> cq(r, GradedClass<C>(draft));
    std::vector<GradedClass<C>> xpow{draft->one()};
    for (int j = 1; j < r; ++j) xpow.push_back(xpow.back() * x);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j <= i; ++j) cq[i] += ce[i - j] * xpow[j];
    GradedClass<C> rhs2(draft), yp = draft->one();
    for (int i = r - 1; i >= 1; --i) {
        rhs2 -= cq[i] * yp;
        yp = yp * y;
    }
    auto ring = Ring<C>::with_rules(draft, {{h1, r, rhs1}, {h2, r - 1, rhs2}});
    auto s = std::make_shared<Space<C>>();
    s->kind = SpaceKind::Grass2;
    s->parent = S;
    s->ring = ring;
    s->reldim = 2 * (r - 2);
    s->new_gens = {h1, h2};
    s->rank = r;
    s->genus = S->genus;
    auto X = ring->gen(h1), Y = ring->gen(h2);
    auto csub = (ring->one() - X) * (ring->one() - Y);
    s->taut.emplace(h1, X);
    s->taut.emplace(h2, Y);
    s->taut.emplace("c(E)", E.chern.pulled(ring));
    s->taut.emplace("c(S)", csub);
    // c(Q) = c(E)/c(S), an honest rank r-2 bundle.
    VBundle<C> Ep{s, r, E.chern.pulled(ring), false, false};
    VBundle<C> Sb{s, 2, csub, false, false};
    auto Q = difference(Ep, Sb, true);
    s->taut.emplace("c(Q)", Q.chern);
    for (int i = 1; i <= r - 2; ++i) s->taut.emplace("sigma" + std::to_string(i), Q.chern.graded_part(i));
    return s;
}

/// Tautological subbundle (rank 2) of a Grassmann node.
template <class C>
VBundle<C> grass_sub(const SpacePtr<C>& G)
{
    if (G->kind != SpaceKind::Grass2) throw RingError("not a Grassmann node");
    return {G, 2, G->tautological("c(S)"), false, false};
}
/// Tautological quotient (rank r-2) of a Grassmann node.
template <class C>
VBundle<C> grass_quot(const SpacePtr<C>& G)
{
    if (G->kind != SpaceKind::Grass2) throw RingError("not a Grassmann node");
    return {G, G->rank - 2, G->tautological("c(Q)"), false, false};
}
/// O(-1) on a projective-bundle node.
template <class C>
VBundle<C> taut_line(const SpacePtr<C>& P)
{
    if (P->kind != SpaceKind::Proj && P->kind != SpaceKind::P1) throw RingError("not a projective node");
    return line_bundle(P, -P->gen(P->new_gens[0]));
}

/// Cotangent bundle of a single step, on that step's space.
template <class C>
VBundle<C> step_cotangent(const SpacePtr<C>& s)
{
    switch (s->kind) {
    case SpaceKind::P1:
        return line_bundle(s, s->gen(s->new_gens[0]).scaled(C(-2)));
    case SpaceKind::Proj: {
        // T = Hom(O(-1), E/O(-1)), so c(T) = c(E (x) O(1)) truncated at rank r-1.
        VBundle<C> E{s, s->rank, s->tautological("c(E)"), false, false};
        GradedClass<C> ct = detail::twist_chern(E, s->gen(s->new_gens[0]), s->rank - 1);
        return dual(VBundle<C>{s, s->rank - 1, ct, false, false});
    }
    case SpaceKind::Grass2: {
        // Omega = S (x) Q^vee.
        return bundle_tensor(grass_sub(s), dual(grass_quot(s)));
    }
    default:
        throw RingError("base space has no relative cotangent bundle");
    }
}

/// Relative cotangent bundle of upper over lower, by multiplicativity.
template <class C>
VBundle<C> rel_cotangent(const SpacePtr<C>& upper, const SpacePtr<C>& lower)
{
    if (!upper->has_ancestor(lower.get())) throw RingError("rel_cotangent: not an ancestor");
    VBundle<C> acc = trivial_bundle(upper, 0);
    std::vector<SpacePtr<C>> chain;
    for (SpacePtr<C> s = upper; s.get() != lower.get(); s = s->parent) chain.push_back(s);
    for (const auto& s : chain) acc = direct_sum(acc, pull_bundle(step_cotangent(s), upper));
    return acc;
}

template <class C>
VBundle<C> rel_tangent(const SpacePtr<C>& upper, const SpacePtr<C>& lower)
{
    return dual(rel_cotangent(upper, lower));
}

} // namespace hurwitz
