#pragma once

#include "ideals.hpp"
#include "jets.hpp"
#include "parallel.hpp"
#include "parse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

using GR = GenusRational;

inline GR genus_scalar(const GenusMode& m) { return m.fixed ? GR(*m.fixed) : GR::g(); }

/// Trigonal tower: base -> P (P^1-bundle) -> PE (P(E^vee), a P^1-bundle over P).
struct Deg3Tower {
    GenusMode mode;
    SpacePtr<GR> base, P, PE;
    VBundle<GR> E, W;
};

inline Deg3Tower deg3_tower(GenusMode mode, int cut = 4)
{
    if (cut < 1) throw RingError("degree-3 tower needs a positive cut");
    Deg3Tower T;
    T.mode = mode;
    T.base = base_new<GR>(mode, {{"a1", 1}, {"a2", 2}, {"a2'", 1}, {"c2", 2}}, cut);
    T.P = p1_bundle(T.base);
    auto z = T.P->gen("z");
    GR a1p = genus_scalar(mode) + GR(2);
    T.E = bundle_from_classes(T.P, {T.P->gen("a1") + z.scaled(a1p), T.P->gen("a2") + T.P->gen("a2'") * z});
    T.PE = proj_bundle(T.P, dual(T.E));
    auto zeta = T.PE->gen("zeta");
    T.W = line_bundle(T.PE, zeta.scaled(GR(3)) - T.PE->gen("a1") - T.PE->gen("z").scaled(a1p));
    return T;
}

struct IndexedClass {
    std::string label;
    std::vector<int> index;
    GradedClass<GR> cls;
};

/// push(c3(P^1(W)) z^i zeta^j) for i, j in {0, 1}.
inline std::vector<IndexedClass> deg3_ideal(const Deg3Tower& T, int threads = 1)
{
    if (T.base->ring->cut() < 3) throw RingError("degree-3 ideal needs base cut at least 3");
    auto J = jet_full(1, T.W, rel_cotangent(T.PE, T.base));
    auto c3 = J.top();
    std::vector<std::pair<int, int>> idx{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    std::vector<IndexedClass> out(idx.size());
    auto z = T.PE->gen("z"), zeta = T.PE->gen("zeta");
    parallel_for(idx.size(), threads, [&](std::size_t n) {
        auto [i, j] = idx[n];
        auto integrand = c3 * z.pow(i) * zeta.pow(j);
        out[n] = {"i=" + std::to_string(i) + ",j=" + std::to_string(j), {i, j}, pushforward(T.PE, T.base, integrand)};
    });
    return out;
}

/// Class of the splitting locus of type (e1, e2) at a fixed genus.
inline GradedClass<GR> splitting_class(int e1, int e2, const Deg3Tower& T)
{
    if (!T.mode.fixed) throw RingError("splitting classes need a fixed genus");
    long g = *T.mode.fixed;
    if (e1 + e2 != g + 2) throw RingError("splitting type must satisfy e1 + e2 = g + 2");
    if (e2 < e1) throw RingError("splitting type needs e1 <= e2");
    int d = e2 - e1 - 1;
    if (d < 0) return GradedClass<GR>(T.base->ring);
    auto z = T.P->gen("z");
    auto twist = [&](long k) { return line_bundle(T.P, z.scaled(GR(k))); };
    auto A = grr_pushforward(T.P, bundle_tensor(T.E, twist(-(e1 + 1))));
    auto O1 = grr_pushforward(T.P, twist(1));
    auto B = grr_pushforward(T.P, bundle_tensor(T.E, twist(-e1)));
    auto num = dual(bundle_tensor(A, O1));
    auto den = dual(B);
    return difference(num, den).c(d);
}

/// Lower-genus correction at g = 4: push of [Z] c2(P^1_{PE/P}(W)).
inline GradedClass<GR> deg3_g4_correction(const Deg3Tower& T)
{
    if (!T.mode.fixed || *T.mode.fixed != 4) throw RingError("the directrix correction is defined only at g = 4");
    auto J = jet_full(1, T.W, rel_cotangent(T.PE, T.P));
    auto Z = parse_class<GR>("(zeta + a1 - a2'/2 - 4z)(a2' - 3a1)", T.PE->ring, 4);
    return pushforward(T.PE, T.base, Z * J.c(2));
}

struct Chow3Report {
    long genus;
    std::vector<std::pair<std::string, GradedClass<GR>>> extra;
    std::vector<int> dims;  // degrees 0..cut
    std::string presentation;
};

inline std::string presentation_from_dims(const std::vector<int>& dims)
{
    auto is = [&](std::vector<int> want) {
        for (std::size_t d = 0; d < dims.size(); ++d)
            if (dims[d] != (d < want.size() ? want[d] : 0)) return false;
        return true;
    };
    if (is({1})) return "Q";
    if (is({1, 1})) return "Q[a1]/(a1^2)";
    if (is({1, 1, 1})) return "Q[a1]/(a1^3)";
    return "unrecognized";
}

/// Chow ring of the trigonal locus at a fixed genus g >= 2.
inline Chow3Report deg3_chow(long g, int threads = 1, int cut = 4)
{
    if (g < 2) throw RingError("genus must be at least 2");
    auto T = deg3_tower(GenusMode::at(g), cut);
    Chow3Report R;
    R.genus = g;
    if (g == 2) R.extra.emplace_back("s(1,3)", splitting_class(1, 3, T));
    else if (g == 3) R.extra.emplace_back("s(1,4)", splitting_class(1, 4, T));
    else if (g == 4) R.extra.emplace_back("directrix correction", deg3_g4_correction(T));
    else if (g == 5) R.extra.emplace_back("s(2,5)", splitting_class(2, 5, T));
    std::vector<GradedClass<GR>> gens;
    for (auto& c : deg3_ideal(T, threads)) gens.push_back(c.cls);
    for (auto& [n, c] : R.extra) gens.push_back(c);
    auto Q = GradedQuotient<GR>::build(T.base->ring, gens, std::vector<std::string>{"a1"}, cut);
    R.dims.push_back(1);
    for (int d = 1; d <= cut; ++d) R.dims.push_back(Q.dim(d));
    R.presentation = presentation_from_dims(R.dims);
    return R;
}

} // namespace hurwitz
