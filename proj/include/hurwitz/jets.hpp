#pragma once

#include "spaces.hpp"

#include <set>
#include <utility>
#include <vector>

namespace hurwitz {

/// Lattice monomials x^i y^j, stored as (i, j).
using Diagram = std::set<std::pair<int, int>>;

struct MixedDiagram {
    Diagram inner;  // values in W
    Diagram outer;  // values in W'; contains inner
};

inline bool diagram_admissible(const Diagram& S)
{
    for (auto [i, j] : S) {
        if (i < 0 || j < 0) return false;
        if (i >= 1 && !S.count({i - 1, j})) return false;
        if (i >= 2 && !S.count({i - 2, j + 1})) return false;
    }
    return true;
}

inline Diagram full_triangle(int m)
{
    Diagram S;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) S.insert({i, j});
    return S;
}

namespace detail {

template <class C>
VBundle<C> sym_power(const VBundle<C>& B, int k)
{
    if (k == 0) return trivial_bundle(B.space, 1);
    if (k == 1) return B;
    if (!B.is_virtual && B.rank == 1) return line_bundle(B.space, B.c(1).scaled(C(k)));
    return sym(k, B);
}

/// W (x) Sym^i Ox (x) Sym^j Oy.
template <class C>
VBundle<C> jet_piece(const VBundle<C>& W, const VBundle<C>& Ox, const VBundle<C>* Oy, int i, int j)
{
    VBundle<C> acc = W;
    if (i > 0) acc = bundle_tensor(acc, sym_power(Ox, i));
    if (j > 0) acc = bundle_tensor(acc, sym_power(*Oy, j));
    return acc;
}

template <class C>
VBundle<C> filtered(std::vector<VBundle<C>> pieces, const SpacePtr<C>& S)
{
    VBundle<C> acc = trivial_bundle(S, 0);
    for (auto& p : pieces) acc = direct_sum(acc, pull_bundle(p, S));
    return acc;
}

} // namespace detail

/// P^m(W) with respect to a relative cotangent bundle O.
template <class C>
VBundle<C> jet_full(int m, const VBundle<C>& W, const VBundle<C>& O)
{
    if (m < 0) throw RingError("jet order must be non-negative");
    std::vector<VBundle<C>> pieces;
    for (int i = 0; i <= m; ++i) pieces.push_back(detail::jet_piece(W, O, static_cast<const VBundle<C>*>(nullptr), i, 0));
    auto r = detail::filtered(std::move(pieces), W.space);
    long want = 0;
    for (int i = 0; i <= m; ++i) want += W.rank * detail::binomial(O.rank + i - 1, i).get_num().get_si();
    if (r.rank != want) throw RingError("jet rank bookkeeping failed");
    return r;
}

template <class C>
VBundle<C> jet_directional(const Diagram& S, const VBundle<C>& W, const VBundle<C>& Ox, const VBundle<C>& Oy)
{
    if (!diagram_admissible(S)) throw RingError("diagram is not admissible");
    std::vector<VBundle<C>> pieces;
    for (auto [i, j] : S) pieces.push_back(detail::jet_piece(W, Ox, &Oy, i, j));
    return detail::filtered(std::move(pieces), W.space);
}

template <class C>
VBundle<C> jet_mixed(const MixedDiagram& M, const VBundle<C>& W, const VBundle<C>& Wq, const VBundle<C>& Ox,
                     const VBundle<C>& Oy)
{
    if (!diagram_admissible(M.inner) || !diagram_admissible(M.outer)) throw RingError("diagram is not admissible");
    for (const auto& d : M.inner)
        if (!M.outer.count(d)) throw RingError("inner diagram not contained in outer");
    std::vector<VBundle<C>> pieces;
    for (auto [i, j] : M.outer)
        pieces.push_back(detail::jet_piece(M.inner.count({i, j}) ? W : Wq, Ox, &Oy, i, j));
    return detail::filtered(std::move(pieces), W.space);
}

/// Top Chern class of a filtered bundle, as the product of the pieces' top
/// classes. Much cheaper than the full total Chern class.
template <class C>
GradedClass<C> top_chern_of_pieces(const std::vector<VBundle<C>>& pieces, const SpacePtr<C>& S)
{
    GradedClass<C> acc = S->one();
    for (const auto& p0 : pieces) {
        auto p = pull_bundle(p0, S);
        if (p.is_virtual) throw RingError("top Chern class of a virtual piece");
        acc = acc * p.top();
    }
    return acc;
}

/// Pieces of the mixed jet bundle, for top Chern class computations.
template <class C>
std::vector<VBundle<C>> jet_mixed_pieces(const MixedDiagram& M, const VBundle<C>& W, const VBundle<C>& Wq,
                                         const VBundle<C>& Ox, const VBundle<C>& Oy)
{
    std::vector<VBundle<C>> pieces;
    for (auto [i, j] : M.outer)
        pieces.push_back(detail::jet_piece(M.inner.count({i, j}) ? W : Wq, Ox, &Oy, i, j));
    return pieces;
}

template <class C>
std::vector<VBundle<C>> jet_directional_pieces(const Diagram& S, const VBundle<C>& W, const VBundle<C>& Ox,
                                               const VBundle<C>& Oy)
{
    std::vector<VBundle<C>> pieces;
    for (auto [i, j] : S) pieces.push_back(detail::jet_piece(W, Ox, &Oy, i, j));
    return pieces;
}

} // namespace hurwitz
