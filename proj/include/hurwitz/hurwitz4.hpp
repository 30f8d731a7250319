#pragma once

#include "hurwitz3.hpp"

#include <map>
#include <string>
#include <vector>

namespace hurwitz {

/// Tetragonal tower: base -> P -> PE = P(E^vee) (a P^2-bundle) -> G, the
/// projectivized relative cotangent bundle of PE over the base.
struct Deg4Tower {
    GenusMode mode;
    SpacePtr<GR> base, P, PE, G;
    VBundle<GR> E, F, W;
};

inline const std::vector<Generator>& deg4_base_generators()
{
    static const std::vector<Generator> gens{{"a1", 1}, {"a2", 2}, {"a3", 3}, {"a2'", 1},
                                             {"a3'", 2}, {"b2", 2}, {"b2'", 1}, {"c2", 2}};
    return gens;
}

inline Deg4Tower deg4_tower(GenusMode mode, int cut = 6)
{
    if (cut < 1) throw RingError("degree-4 tower needs a positive cut");
    Deg4Tower T;
    T.mode = mode;
    T.base = base_new<GR>(mode, deg4_base_generators(), cut);
    T.P = p1_bundle(T.base);
    auto z = T.P->gen("z");
    auto g = [&](const std::string& n) { return T.P->gen(n); };
    GR a1p = genus_scalar(mode) + GR(3);
    T.E = bundle_from_classes(T.P, {g("a1") + z.scaled(a1p), g("a2") + g("a2'") * z, g("a3") + g("a3'") * z});
    T.F = bundle_from_classes(T.P, {g("a1") + z.scaled(a1p), g("b2") + g("b2'") * z});
    T.PE = proj_bundle(T.P, dual(T.E));
    auto zeta = T.PE->gen("zeta");
    T.W = bundle_tensor(line_bundle(T.PE, zeta.scaled(GR(2))), dual(pull_bundle(T.F, T.PE)));
    T.G = proj_bundle(T.PE, rel_cotangent(T.PE, T.base), "tau");
    return T;
}

/// Integrand c2(W) c4(W (x) Omega_x) on G, where Omega_y = O_G(-1) is the
/// marked cotangent line and Omega_x the quotient.
inline GradedClass<GR> deg4_integrand(const Deg4Tower& T)
{
    auto Om = pull_bundle(rel_cotangent(T.PE, T.base), T.G);
    auto Oy = line_bundle(T.G, -T.G->gen("tau"));
    auto Ox = difference(Om, Oy, true);
    auto W = pull_bundle(T.W, T.G);
    return W.top() * bundle_tensor(W, Ox).top();
}

/// push(c6 tau^i zeta^j z^k) for i, j <= 2, k <= 1.
inline std::vector<IndexedClass> deg4_ideal(const Deg4Tower& T, int threads = 1)
{
    auto c6 = deg4_integrand(T);
    std::vector<std::vector<int>> idx;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (int k = 0; k <= 1; ++k)
                if (1 + i + j + k <= T.base->ring->cut()) idx.push_back({i, j, k});
    std::vector<IndexedClass> out(idx.size());
    auto tau = T.G->gen("tau"), zeta = T.G->gen("zeta"), z = T.G->gen("z");
    parallel_for(idx.size(), threads, [&](std::size_t n) {
        const auto& v = idx[n];
        auto integrand = c6 * tau.pow(v[0]) * zeta.pow(v[1]) * z.pow(v[2]);
        std::string label = "i=" + std::to_string(v[0]) + ",j=" + std::to_string(v[1]) + ",k=" + std::to_string(v[2]);
        out[n] = {label, v, pushforward(T.G, T.base, integrand)};
    });
    return out;
}

/// Class of the locus of covers with a point of total ramification in two
/// directions, from a rank-7 mixed jet bundle on a tower over PE.
inline GradedClass<GR> deg4_U(const Deg4Tower& T)
{
    auto PT = proj_bundle(T.PE, rel_tangent(T.PE, T.P), "xi");
    auto PF = proj_bundle(PT, pull_bundle(T.F, PT), "eta");
    auto xi = PF->gen("xi"), eta = PF->gen("eta"), zeta = PF->gen("zeta");
    auto Ox = line_bundle(PF, xi);
    auto Oy = difference(pull_bundle(rel_cotangent(T.PE, T.P), PF), Ox, true);
    auto W = pull_bundle(T.W, PF);
    auto Wq = line_bundle(PF, eta + zeta.scaled(GR(2)));
    MixedDiagram M{{{0, 0}, {1, 0}}, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}}};
    auto top = top_chern_of_pieces(jet_mixed_pieces(M, W, Wq, Ox, Oy), PF);
    return pushforward(PF, T.base, top);
}

/// Class of the universal curve C inside P(E) (lines in E^vee) from its
/// resolution: [C] is the leading graded piece of ch(O_C), in codimension
/// rank(E) - 1. Each term of `resolution` is (sign, bundle on X).
inline GradedClass<GR> ce_curve_class(const SpacePtr<GR>& X, const std::vector<std::pair<int, VBundle<GR>>>& resolution,
                                      int codim)
{
    GradedClass<GR> ch(X->ring);
    for (const auto& [sign, B] : resolution) ch += chern_character(pull_bundle(B, X)).scaled(GR(sign));
    return ch.graded_part(codim);
}

/// kappa_i = push([C] K^{i+1}) with K = c1(omega) = zeta - 2z on the universal curve.
inline GradedClass<GR> ce_kappa(const SpacePtr<GR>& X, const SpacePtr<GR>& base, const GradedClass<GR>& curve, int i)
{
    auto K = X->gen("zeta") - X->gen("z").scaled(GR(2));
    return pushforward(X, base, curve * K.pow(i + 1));
}

/// kappa_i on the degree-4 base, from 0 -> det E(-4) -> F(-2) -> O -> O_C.
inline GradedClass<GR> deg4_kappa(GenusMode mode, int i)
{
    auto T = deg4_tower(mode, std::max(i, 1));
    auto X = T.PE;
    auto O = [&](int k) { return line_bundle(X, X->gen("zeta").scaled(GR(k))); };
    auto E = pull_bundle(T.E, X), F = pull_bundle(T.F, X);
    auto curve = ce_curve_class(X, {{1, O(0)}, {-1, bundle_tensor(F, O(-2))}, {1, bundle_tensor(det(E), O(-4))}}, 2);
    return ce_kappa(X, T.base, curve, i);
}

} // namespace hurwitz
