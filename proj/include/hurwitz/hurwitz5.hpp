#pragma once

#include "hurwitz4.hpp"

#include <map>
#include <string>
#include <vector>

namespace hurwitz {

// The degree-5 towers are too large to build directly, so every fibration
// step is pushed forward once, universally, in a ring of formal Chern
// classes with rational coefficients. The pieces are glued at the end on the
// formal P^1-bundle level (classes e_i = c_i(E), f_i = c_i(F) and z) and only
// then substituted into the genuine ring of the base.

namespace deg5 {

using Q = Rational;

inline std::vector<Generator> chern_gens(const std::string& p, int r, int from = 1)
{
    std::vector<Generator> g;
    for (int i = from; i <= r; ++i) g.push_back({p + std::to_string(i), i});
    return g;
}

inline std::vector<GradedClass<Q>> gens_of(const SpacePtr<Q>& S, const std::string& p, int r)
{
    std::vector<GradedClass<Q>> out;
    for (int i = 1; i <= r; ++i) out.push_back(S->gen(p + std::to_string(i)));
    return out;
}

inline std::vector<Generator> concat(std::vector<std::vector<Generator>> parts)
{
    std::vector<Generator> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

/// Weighted degree of a monomial in (v1, v2, v3) with weights 1, 2, 3.
inline int weight(const std::vector<int>& e)
{
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
    return w;
}

/// All exponent vectors of length n with weighted degree at most wmax.
inline std::vector<std::vector<int>> exponent_box(int n, int wmax)
{
    std::vector<std::vector<int>> out;
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n) {
            out.push_back(e);
            return;
        }
        for (int k = 0; (i + 1) * k <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - (i + 1) * k);
        }
        e[i] = 0;
    };
    rec(rec, 0, wmax);
    return out;
}

inline GradedClass<Q> monomial_in(const SpacePtr<Q>& S, const std::string& p, const std::vector<int>& e)
{
    GradedClass<Q> acc = S->one();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) acc = acc * S->gen(p + std::to_string(i + 1)).pow(e[i]);
    return acc;
}

/// Universal push along G(2, T), T of rank 4 with Chern classes t_i, of
/// c6(Omega_x (x) N) s1^l1 s2^l2. Omega_x is the dual of the tautological
/// subbundle, s_i are the Chern classes of the quotient and N has rank 3 with
/// Chern classes n_i.
struct GTForms {
    SpacePtr<Q> base;
    std::map<std::pair<int, int>, GradedClass<Q>> P;
};

inline GTForms gt_forms(int lmax_weight)
{
    GTForms F;
    int cut = 2 + lmax_weight;
    F.base = base_new<Q>(GenusMode::symbolic(), concat({chern_gens("t", 4), chern_gens("n", 3)}), cut);
    auto T = bundle_from_classes(F.base, gens_of(F.base, "t", 4));
    auto N = bundle_from_classes(F.base, gens_of(F.base, "n", 3));
    auto G = grass2_bundle(F.base, T, "u1", "u2");
    auto Ox = dual(grass_sub(G));
    auto c6 = bundle_tensor(Ox, pull_bundle(N, G)).top();
    auto s1 = G->tautological("sigma1"), s2 = G->tautological("sigma2");
    for (int l1 = 0; l1 <= 2; ++l1)
        for (int l2 = 0; l1 + l2 <= 2; ++l2)
            if (l1 + 2 * l2 <= lmax_weight) F.P[{l1, l2}] = pushforward(G, F.base, c6 * s1.pow(l1) * s2.pow(l2));
    return F;
}

/// Chern classes of O(l) (x) wedge^2 R for R of rank 3 with Chern classes
/// sigma_i, in a free ring containing sigma1..3 and l.
inline std::vector<GradedClass<Q>> twisted_wedge2(const SpacePtr<Q>& S)
{
    auto R = bundle_from_classes(S, gens_of(S, "sigma", 3));
    auto N = bundle_tensor(wedge(2, R), line_bundle(S, S->gen("l")));
    return {N.c(1), N.c(2), N.c(3)};
}

/// Universal push along G(2, F), F of rank 5 with Chern classes f_i, of
/// c9(W') sigma^gamma where W' = (wedge^2 F - det S) (x) O(l) and sigma_i are
/// the Chern classes of the rank-3 quotient.
struct GFForms {
    SpacePtr<Q> base;
    std::map<std::vector<int>, GradedClass<Q>> T;
};

inline GFForms gf_forms(int gamma_weight, int cut)
{
    GFForms F;
    F.base = base_new<Q>(GenusMode::symbolic(), concat({chern_gens("f", 5), {{"l", 1}}}), cut);
    auto Fb = bundle_from_classes(F.base, gens_of(F.base, "f", 5));
    auto L2F = wedge(2, Fb);
    auto G = grass2_bundle(F.base, Fb);
    auto U9 = difference(pull_bundle(L2F, G), det(grass_sub(G)), true);
    auto c9 = bundle_tensor(U9, line_bundle(G, G->gen("l"))).top();
    std::vector<GradedClass<Q>> sig{G->tautological("sigma1"), G->tautological("sigma2"),
                                    G->tautological("sigma3")};
    for (const auto& g : exponent_box(3, gamma_weight)) {
        if (3 + weight(g) > cut) continue;
        GradedClass<Q> m = G->one();
        for (int i = 0; i < 3; ++i)
            if (g[i]) m = m * sig[i].pow(g[i]);
        F.T[g] = pushforward(G, F.base, c9 * m);
    }
    return F;
}

/// Splits a class into sigma-monomials with coefficients in the other variables.
inline std::map<std::vector<int>, GradedClass<Q>> split_sigma(const GradedClass<Q>& a, const RingPtr<Q>& coeff_ring)
{
    const auto& R = a.ring();
    int s[3] = {R->index("sigma1"), R->index("sigma2"), R->index("sigma3")};
    std::map<std::vector<int>, TermMap<Q>> parts;
    for (const auto& [m, c] : a.terms()) {
        std::vector<int> key{m.e[s[0]], m.e[s[1]], m.e[s[2]]};
        Monomial rest;
        for (int i = 0; i < coeff_ring->ngens(); ++i) rest.e[i] = m.e[R->index(coeff_ring->generator(i).name)];
        for (int i = 0; i < R->ngens(); ++i)
            if (i != s[0] && i != s[1] && i != s[2] && !coeff_ring->has(R->generator(i).name) && m.e[i])
                throw RingError("unexpected generator " + R->generator(i).name);
        parts[key][rest] += c;
    }
    std::map<std::vector<int>, GradedClass<Q>> out;
    for (auto& [k, t] : parts) out.emplace(k, GradedClass<Q>::from_map(coeff_ring, std::move(t)));
    return out;
}

/// Formal P^1-bundle level: free in e1..e4, f1..f5 and z.
inline SpacePtr<Q> formal_p(int cut)
{
    return base_new<Q>(GenusMode::symbolic(), concat({chern_gens("e", 4), chern_gens("f", 5), {{"z", 1}}}), cut);
}

} // namespace deg5

/// The genuine base and its P^1-bundle for degree 5.
struct Deg5Base {
    GenusMode mode;
    SpacePtr<GR> base, P;
    std::map<std::string, GradedClass<GR>> e_images;  // e_i, f_i, z -> classes on P
};

inline const std::vector<Generator>& deg5_base_generators()
{
    static const std::vector<Generator> gens{{"a1", 1},  {"a2", 2},  {"a3", 3},  {"a4", 4},  {"a2'", 1}, {"a3'", 2},
                                             {"a4'", 3}, {"b2", 2},  {"b3", 3},  {"b4", 4},  {"b5", 5},  {"b2'", 1},
                                             {"b3'", 2}, {"b4'", 3}, {"b5'", 4}, {"c2", 2}};
    return gens;
}

inline Deg5Base deg5_base(GenusMode mode, int cut)
{
    Deg5Base B;
    B.mode = mode;
    B.base = base_new<GR>(mode, deg5_base_generators(), cut);
    B.P = p1_bundle(B.base);
    auto z = B.P->gen("z");
    auto g = [&](const std::string& n) { return B.P->gen(n); };
    GR gg = genus_scalar(mode);
    B.e_images["e1"] = g("a1") + z.scaled(gg + GR(4));
    for (int i = 2; i <= 4; ++i) {
        auto s = std::to_string(i);
        B.e_images["e" + s] = g("a" + s) + g("a" + s + "'") * z;
    }
    B.e_images["f1"] = g("a1").scaled(GR(2)) + z.scaled(GR(2) * gg + GR(8));
    for (int i = 2; i <= 5; ++i) {
        auto s = std::to_string(i);
        B.e_images["f" + s] = g("b" + s) + g("b" + s + "'") * z;
    }
    B.e_images["z"] = z;
    return B;
}

/// Push a formal P-level class times z^i down to the base.
inline GradedClass<GR> deg5_descend(const Deg5Base& B, const GradedClass<Rational>& formal, int i)
{
    auto onP = class_substitute<GR, Rational>(formal, B.e_images, B.P->ring);
    if (i) onP = onP * B.P->gen("z").pow(i);
    return pushforward(B.P, B.base, onP);
}

/// Formal projective bundle P(E') over the formal P level, E' = E^vee (x) det E.
struct Deg5FormalPE {
    SpacePtr<Rational> P, PE;
    VBundle<Rational> E, F;
};

inline Deg5FormalPE deg5_formal_pe(int cut)
{
    Deg5FormalPE X;
    X.P = deg5::formal_p(cut);
    X.E = bundle_from_classes(X.P, deg5::gens_of(X.P, "e", 4));
    X.F = bundle_from_classes(X.P, deg5::gens_of(X.P, "f", 5));
    auto Ep = bundle_tensor(dual(X.E), det(X.E));
    X.PE = proj_bundle(X.P, Ep);
    return X;
}

/// push(c10(O(1) (x) wedge^2 F) zeta^j z^i), 0 <= j <= 3, 0 <= i <= 1.
inline std::vector<IndexedClass> deg5_ni_ideal(const Deg5Base& B, int threads = 1)
{
    const int D = B.base->ring->cut();
    if (D < 6) throw RingError("degree-5 ideals need base cut at least 6");
    auto X = deg5_formal_pe(D + 1);
    auto W = bundle_tensor(wedge(2, pull_bundle(X.F, X.PE)), line_bundle(X.PE, X.PE->gen("zeta")));
    auto c10 = W.top();
    std::vector<std::pair<int, int>> idx;
    for (int j = 0; j <= 3; ++j)
        for (int i = 0; i <= 1; ++i) idx.push_back({j, i});
    std::vector<IndexedClass> out(idx.size());
    auto zeta = X.PE->gen("zeta");
    parallel_for(idx.size(), threads, [&](std::size_t n) {
        auto [j, i] = idx[n];
        std::string label = "j=" + std::to_string(j) + ",i=" + std::to_string(i);
        GradedClass<GR> cls(B.base->ring);
        if (6 + j + i <= D) cls = deg5_descend(B, pushforward(X.PE, X.P, c10 * zeta.pow(j)), i);
        out[n] = {label, {j, i}, cls};
    });
    return out;
}

/// Index (l1, l2, k1, k2, k3, j, i) of a singular-ideal generator.
inline int deg5_sing_degree(const std::vector<int>& v)
{
    return 1 + v[0] + 2 * v[1] + v[2] + 2 * v[3] + 3 * v[4] + v[5] + v[6];
}

/// Pushforwards of c15(RQ^1) s1^l1 s2^l2 sigma1^k1 sigma2^k2 sigma3^k3 zeta^j z^i
/// for l1 + l2 <= 2, k1 + k2 + k3 <= 2, j <= 3, i <= 1, restricted to the
/// generators whose degree does not exceed the base cut.
inline std::vector<IndexedClass> deg5_sing_ideal(const Deg5Base& B, int threads = 1)
{
    using namespace deg5;
    const int D = B.base->ring->cut();
    if (D < 6) throw RingError("degree-5 ideals need base cut at least 6");
    const int wmax = D - 1;  // total weight of l, k, j, i

    std::vector<std::vector<int>> idx;
    for (int l1 = 0; l1 <= 2; ++l1)
        for (int l2 = 0; l1 + l2 <= 2; ++l2)
            for (int k1 = 0; k1 <= 2; ++k1)
                for (int k2 = 0; k1 + k2 <= 2; ++k2)
                    for (int k3 = 0; k1 + k2 + k3 <= 2; ++k3)
                        for (int j = 0; j <= 3; ++j)
                            for (int i = 0; i <= 1; ++i) {
                                std::vector<int> v{l1, l2, k1, k2, k3, j, i};
                                if (deg5_sing_degree(v) <= D) idx.push_back(v);
                            }

    // Stage 1: G(2, T_{PE'/base}).
    auto GT = gt_forms(std::min(4, wmax));
    // Stage 2: rewrite n_i = c_i(O(zeta) (x) wedge^2 R) in sigma and l.
    auto S2 = base_new<Q>(GenusMode::symbolic(), concat({chern_gens("t", 4), chern_gens("sigma", 3), {{"l", 1}}}),
                          2 + wmax);
    auto nimg = twisted_wedge2(S2);
    std::map<std::string, GradedClass<Q>> nmap{{"n1", nimg[0]}, {"n2", nimg[1]}, {"n3", nimg[2]}};
    std::map<std::pair<int, int>, GradedClass<Q>> X;
    for (const auto& [l, P] : GT.P) X[l] = class_substitute<Q, Q>(P, nmap, S2->ring);
    auto coeff_ring = Ring<Q>::make(concat({chern_gens("t", 4), {{"l", 1}}}), 2 + wmax);
    // Stage 3: G(2, F) module pushes.
    auto GF = gf_forms(2 + wmax, 3 + 2 + wmax);
    // Stage 4: P(E') over the formal P level.
    auto FX = deg5_formal_pe(D + 1);
    auto& PE = FX.PE;
    auto Tt = direct_sum(rel_tangent(PE, FX.P), line_bundle(PE, PE->gen("z").scaled(Q(2))));
    std::map<std::string, GradedClass<Q>> to_pe{{"l", PE->gen("zeta")}};
    for (int i = 1; i <= 4; ++i) to_pe["t" + std::to_string(i)] = Tt.c(i);
    std::map<std::vector<int>, GradedClass<Q>> Tpe;
    for (const auto& [g, T] : GF.T) Tpe[g] = class_substitute<Q, Q>(T, to_pe, PE->ring);

    // One GF push per (l, k); then the zeta^j z^i part is cheap.
    std::map<std::vector<int>, GradedClass<Q>> Y;  // key (l1,l2,k1,k2,k3)
    std::vector<std::vector<int>> lk;
    for (const auto& v : idx) {
        std::vector<int> key(v.begin(), v.begin() + 5);
        if (!Y.count(key)) {
            Y.emplace(key, GradedClass<Q>(PE->ring));
            lk.push_back(key);
        }
    }
    std::vector<GradedClass<Q>> Yv(lk.size(), GradedClass<Q>(PE->ring));
    parallel_for(lk.size(), threads, [&](std::size_t n) {
        const auto& key = lk[n];
        GradedClass<Q> Xk = X.at({key[0], key[1]});
        for (int a = 0; a < 3; ++a)
            if (key[2 + a]) Xk = Xk * S2->gen("sigma" + std::to_string(a + 1)).pow(key[2 + a]);
        GradedClass<Q> acc(PE->ring);
        for (const auto& [g, coef] : split_sigma(Xk, coeff_ring)) {
            auto it = Tpe.find(g);
            if (it == Tpe.end()) continue;  // beyond the cut
            acc += class_substitute<Q, Q>(coef, to_pe, PE->ring) * it->second;
        }
        Yv[n] = acc;
    });
    for (std::size_t n = 0; n < lk.size(); ++n) Y[lk[n]] = Yv[n];

    std::vector<IndexedClass> out(idx.size());
    auto zeta = PE->gen("zeta");
    parallel_for(idx.size(), threads, [&](std::size_t n) {
        const auto& v = idx[n];
        std::vector<int> key(v.begin(), v.begin() + 5);
        auto onP = pushforward(PE, FX.P, Y.at(key) * zeta.pow(v[5]));
        std::string label = "l=" + std::to_string(v[0]) + std::to_string(v[1]) + ",k=" + std::to_string(v[2]) +
                            std::to_string(v[3]) + std::to_string(v[4]) + ",j=" + std::to_string(v[5]) +
                            ",i=" + std::to_string(v[6]);
        out[n] = {label, v, deg5_descend(B, onP, v[6])};
    });
    return out;
}

/// kappa_i on the degree-5 base, from the rank-5 Pfaffian resolution
/// 0 -> det E(-5) -> F^vee (x) det E(-3) -> F(-2) -> O -> O_C.
inline GradedClass<GR> deg5_kappa(GenusMode mode, int i)
{
    auto B = deg5_base(mode, std::max(i, 1));
    std::vector<GradedClass<GR>> e, f;
    for (int k = 1; k <= 4; ++k) e.push_back(B.e_images.at("e" + std::to_string(k)));
    for (int k = 1; k <= 5; ++k) f.push_back(B.e_images.at("f" + std::to_string(k)));
    auto E0 = bundle_from_classes(B.P, e);
    auto X = proj_bundle(B.P, dual(E0));
    auto O = [&](int k) { return line_bundle(X, X->gen("zeta").scaled(GR(k))); };
    auto E = pull_bundle(E0, X), F = pull_bundle(bundle_from_classes(B.P, f), X);
    auto dE = det(E);
    auto curve = ce_curve_class(X,
                                {{1, O(0)},
                                 {-1, bundle_tensor(F, O(-2))},
                                 {1, bundle_tensor(bundle_tensor(dual(F), dE), O(-3))},
                                 {-1, bundle_tensor(dE, O(-5))}},
                                3);
    return ce_kappa(X, B.base, curve, i);
}

/// Classes from the triple-point construction on X = P(T_{G/P}) x_G P(W^vee)
/// over G = G(2, F): [T] = push c18(M), [U] = push c18(M) (c1(W') + 3 c1(Omega_x))
/// and the extra class push c18(M) z.
struct Deg5Triple {
    SpacePtr<GR> base;
    int rank = 0;
    GradedClass<GR> T, U, extra;
};

inline Deg5Triple deg5_triple_class_suite(GenusMode mode, int cut = 2)
{
    if (cut < 2) throw RingError("the triple-point classes need base cut at least 2");
    auto B = deg5_base(mode, cut);
    std::vector<GradedClass<GR>> e, f;
    for (int k = 1; k <= 4; ++k) e.push_back(B.e_images.at("e" + std::to_string(k)));
    for (int k = 1; k <= 5; ++k) f.push_back(B.e_images.at("f" + std::to_string(k)));
    auto E = bundle_from_classes(B.P, e), F = bundle_from_classes(B.P, f);
    auto Ep = bundle_tensor(dual(E), det(E));
    auto G = grass2_bundle(B.P, F);
    // O_G(1) = det S^vee, so c1 = sigma1 - c1(F).
    auto O1 = line_bundle(G, G->tautological("sigma1") - G->tautological("c(E)").graded_part(1));
    auto Qcok = difference(pull_bundle(wedge(2, F), G), pull_bundle(Ep, G), true);
    auto W = bundle_tensor(Qcok, O1);
    auto PT = proj_bundle(G, rel_tangent(G, B.P), "xi");
    auto X = proj_bundle(PT, dual(pull_bundle(W, PT)), "eta");
    auto xi = X->gen("xi"), eta = X->gen("eta");
    auto Ox = line_bundle(X, xi);
    auto Oy = difference(pull_bundle(rel_cotangent(G, B.P), X), Ox, true);
    MixedDiagram M{{{0, 0}, {1, 0}}, {{0, 0}, {1, 0}, {0, 1}, {2, 0}}};
    auto pieces = jet_mixed_pieces(M, pull_bundle(W, X), line_bundle(X, eta), Ox, Oy);
    Deg5Triple R;
    R.base = B.base;
    for (const auto& p : pieces) R.rank += p.rank;
    auto top = top_chern_of_pieces(pieces, X);
    R.T = pushforward(X, B.base, top);
    R.U = pushforward(X, B.base, top * (eta + xi.scaled(GR(3))));
    R.extra = pushforward(X, B.base, top * X->gen("z"));
    return R;
}

} // namespace hurwitz
