#pragma once

#include "gring.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

enum class SpaceKind { Base, P1, Proj, Grass2 };

template <class C>
struct Space;
template <class C>
using SpacePtr = std::shared_ptr<const Space<C>>;

/// One node of a tower of fibrations. Grassmann nodes are modelled by the
/// complete flag P(E), P(E/L1); their ring carries h1 and h2.
template <class C>
struct Space {
    SpaceKind kind = SpaceKind::Base;
    SpacePtr<C> parent;
    RingPtr<C> ring;
    int reldim = 0;
    std::vector<std::string> new_gens;
    int rank = 0;                        // rank of the bundle being projectivized
    std::optional<long> genus;           // fixed genus, or symbolic when empty
    std::map<std::string, GradedClass<C>> taut;

    const GradedClass<C>& tautological(const std::string& name) const
    {
        auto it = taut.find(name);
        if (it == taut.end()) throw RingError("space exposes no class " + name);
        return it->second;
    }
    GradedClass<C> gen(const std::string& name) const { return ring->gen(name); }
    GradedClass<C> one() const { return ring->one(); }

    bool has_ancestor(const Space* s) const
    {
        for (const Space* p = this; p; p = p->parent.get())
            if (p == s) return true;
        return false;
    }
    int reldim_over(const Space* lower) const
    {
        int d = 0;
        for (const Space* p = this; p != lower; p = p->parent.get()) {
            if (!p) throw RingError("not an ancestor");
            d += p->reldim;
        }
        return d;
    }
};

namespace detail {

template <class C>
GradedClass<C> extract_fiber(const GradedClass<C>& a, const RingPtr<C>& parent_ring,
                             const std::vector<std::pair<int, int>>& fiber)
{
    TermMap<C> acc;
    for (const auto& [m, c] : a.terms()) {
        bool hit = true;
        for (auto [v, e] : fiber)
            if (m.e[v] != e) { hit = false; break; }
        if (!hit) continue;
        Monomial mm = m;
        for (auto [v, e] : fiber) mm.e[v] = 0;
        for (int i = parent_ring->ngens(); i < a.ring()->ngens(); ++i)
            if (mm.e[i]) throw RingError("pushforward left a fiber generator behind");
        if (!parent_ring->keeps(mm)) continue;
        acc[mm] += c;
    }
    return GradedClass<C>::from_map(parent_ring, std::move(acc));
}

} // namespace detail

/// Pushforward along a single fibration step.
template <class C>
GradedClass<C> push_step(const Space<C>& s, const GradedClass<C>& a0)
{
    if (!s.parent) throw RingError("base space has no parent");
    GradedClass<C> a = a0.pulled(s.ring);
    const auto& pr = s.parent->ring;
    const auto& R = *s.ring;
    switch (s.kind) {
    case SpaceKind::P1:
        return detail::extract_fiber(a, pr, {{R.index(s.new_gens[0]), 1}});
    case SpaceKind::Proj:
        return detail::extract_fiber(a, pr, {{R.index(s.new_gens[0]), s.rank - 1}});
    case SpaceKind::Grass2: {
        GradedClass<C> b = a * s.ring->gen(s.new_gens[0]);
        return detail::extract_fiber(b, pr, {{R.index(s.new_gens[0]), s.rank - 1}, {R.index(s.new_gens[1]), s.rank - 2}});
    }
    default:
        throw RingError("cannot push forward from a base space");
    }
}

/// Composite pushforward from `from` down to its ancestor `to`.
template <class C>
GradedClass<C> pushforward(const SpacePtr<C>& from, const SpacePtr<C>& to, const GradedClass<C>& a)
{
    if (!from->has_ancestor(to.get())) throw RingError("pushforward target is not an ancestor");
    GradedClass<C> cur = a.pulled(from->ring);
    for (const Space<C>* s = from.get(); s != to.get(); s = s->parent.get()) cur = push_step(*s, cur);
    return cur;
}

/// Pull a class on an ancestor space up to `to`.
template <class C>
GradedClass<C> pull(const GradedClass<C>& a, const SpacePtr<C>& to)
{
    return a.pulled(to->ring);
}

} // namespace hurwitz
