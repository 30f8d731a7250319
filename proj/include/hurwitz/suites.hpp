#pragma once

#include "hurwitz5.hpp"
#include "report.hpp"

#include <chrono>
#include <functional>
#include <random>

namespace hurwitz {

struct RunConfig {
    std::optional<long> genus;  // empty means symbolic
    int cut = 0;                // 0 selects the pipeline default
    int max_codim = 0;          // 0 selects the pipeline default
    int threads = 1;
    bool deep = false;

    GenusMode mode() const { return genus ? GenusMode::at(*genus) : GenusMode::symbolic(); }
    ojson genus_json() const { return genus ? ojson(*genus) : ojson("symbolic"); }
};

namespace detail {

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline GradedClass<GR> into(const GradedClass<GR>& a, const RingPtr<GR>& R)
{
    return class_substitute<GR, GR>(a, {}, R);
}

inline ojson generators_json(const std::vector<IndexedClass>& v)
{
    ojson out = ojson::array();
    for (const auto& c : v) out.push_back({{"index", c.label}, {"class", c.cls.to_string()}});
    return out;
}

inline ojson to_ojson(const nlohmann::json& j) { return ojson::parse(j.dump()); }

inline std::string join(const std::vector<std::string>& v, const std::string& sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

inline std::string dims_str(const std::vector<int>& v)
{
    std::vector<std::string> s;
    for (int x : v) s.push_back(std::to_string(x));
    return join(s, ",");
}

/// Evaluate a word such as "T*kappa1^2" in named classes.
inline GradedClass<GR> eval_word(const std::string& w, const std::map<std::string, GradedClass<GR>>& vals,
                                 const RingPtr<GR>& R)
{
    std::vector<Generator> gens;
    for (const auto& [n, c] : vals) gens.push_back({n, c.min_degree()});
    auto S = Ring<GR>::make(gens, R->cut());
    return class_substitute<GR, GR>(parse_class<GR>(w, S), vals, R);
}

inline std::vector<GradedClass<GR>> parse_all(const std::vector<std::string>& v, const RingPtr<GR>& R,
                                              std::optional<long> genus)
{
    std::vector<GradedClass<GR>> out;
    for (const auto& s : v) out.push_back(parse_class<GR>(s, R, genus));
    return out;
}

/// Dimensions of Q(g)[kept]/<rels> in degrees 1..dmax.
inline std::vector<int> presentation_dims(const std::vector<Generator>& kept, const std::vector<std::string>& rels,
                                          int dmax, std::optional<long> genus)
{
    auto R = Ring<GR>::make(kept, dmax);
    std::vector<std::string> names;
    for (const auto& g : kept) names.push_back(g.name);
    auto Q = GradedQuotient<GR>::build(R, parse_all(rels, R, genus), names, dmax);
    return Q.dims();
}

inline GradedQuotient<GR> build_quotient(const RingPtr<GR>& R, const std::vector<GradedClass<GR>>& gens,
                                         const std::vector<std::string>& keep, int dmax, bool& strict)
{
    try {
        strict = true;
        return GradedQuotient<GR>::build(R, gens, keep, dmax);
    } catch (const RingError&) {
        // At special genera a preferred generator may fail to survive.
        strict = false;
        return GradedQuotient<GR>::build(R, gens, std::nullopt, dmax);
    }
}

inline ojson quotient_json(const GradedQuotient<GR>& Q, bool strict)
{
    ojson j;
    j["dims"] = Q.dims();
    j["generators"] = Q.kept();
    j["elimination"] = strict ? "preferred generators" : "greedy";
    ojson el = ojson::object();
    for (const auto& [n, c] : Q.eliminations()) el[n] = c.to_string();
    j["eliminations"] = el;
    return j;
}

/// Spanning-set determinant against a reference basis in degree d. `known`
/// holds recorded integer roots for this set, if any.
inline Check& check_spanning(Section& sec, const std::string& id, const GradedQuotient<GR>& Q, int d,
                             const std::vector<std::string>& words, const std::vector<GradedClass<GR>>& S,
                             const std::vector<GradedClass<GR>>& basis, ojson& rows, const ojson* known = nullptr)
{
    auto rep = DeterminantReport::of(determinant(Q.matrix_in_basis(d, S, basis)));
    rows.push_back({{"codim", d}, {"set", join(words)}, {"determinant", rep.value.to_string()},
                    {"integer_roots", rep.roots}, {"poles", rep.poles}});
    bool ok = rep.nonvanishing() && rep.poles.empty();
    std::string got = rep.value.to_string();
    if (!rep.roots.empty()) {
        std::vector<std::string> rs;
        for (long x : rep.roots) rs.push_back(std::to_string(x));
        got += ", roots at g = " + join(rs);
    }
    auto& c = sec.check(id, ok, "nonzero, no integer roots >= 2", got);
    if (!ok && known && !rep.value.is_zero() && rep.poles.empty() &&
        known->at("roots").get<std::set<long>>() == rep.roots) {
        c.status = Status::Erratum;
        c.note = "recorded: " + known->at("note").get<std::string>();
    }
    return c;
}

/// Compare modulo the ideal; representatives in the free ring may differ.
inline Check& check_class_mod(Section& sec, const std::string& id, const GradedQuotient<GR>& Q,
                              const GradedClass<GR>& computed, const std::string& suite, const std::string& key,
                              std::optional<long> genus)
{
    auto want = Golden::get().value(suite, key);
    auto w = parse_class<GR>(want, computed.ring(), genus);
    bool same = w == computed;
    bool ok = same || Q.contains(w - computed);
    return sec.check(id, ok, want, computed.to_string(),
                     same ? "" : ok ? "equal modulo the ideal; the computed representative differs" : "");
}

inline std::string monomial_word(const std::string& w, int i)
{
    std::string out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w.compare(p, 7, "^{i-1}") == 0) { out += "^" + std::to_string(i - 1); p += 5; }
        else if (w.compare(p, 2, "^i") == 0) { out += "^" + std::to_string(i); p += 1; }
        else out += w[p];
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Degree 3

inline Section deg3_relations(const RunConfig& cfg)
{
    detail::Stopwatch sw;
    Section sec;
    sec.name = cfg.genus ? "deg3.relations.g" + std::to_string(*cfg.genus) : "deg3.relations";
    auto T = deg3_tower(cfg.mode(), cfg.cut ? cfg.cut : 4);
    auto I = deg3_ideal(T, cfg.threads);
    sec.data["degree"] = 3;
    sec.data["genus"] = cfg.genus_json();
    sec.data["cut"] = T.base->ring->cut();
    sec.data["generators"] = detail::generators_json(I);
    if (!cfg.genus) {
        check_class(sec, "deg3.generator.0.0", I[0].cls, "deg3", "generator.0.0", std::nullopt);
        std::vector<int> degs;
        for (const auto& c : I) degs.push_back(c.cls.max_degree());
        auto want = Golden::get().ints("deg3", "generator.degrees");
        sec.check("deg3.generator.degrees", degs == want, detail::dims_str(want), detail::dims_str(degs));
    } else if (*cfg.genus == 2) {
        check_class(sec, "deg3.g2.generator.0.0", I[0].cls, "deg3", "g2.generator.0.0", 2);
    }
    sec.seconds = sw.seconds();
    return sec;
}

inline Section deg3_dims(const RunConfig& cfg)
{
    detail::Stopwatch sw;
    Section sec;
    sec.name = "deg3.dims";
    int dmax = cfg.max_codim ? cfg.max_codim : 4;
    auto T = deg3_tower(cfg.mode(), std::max(cfg.cut ? cfg.cut : 4, dmax));
    std::vector<GradedClass<GR>> gens;
    for (auto& c : deg3_ideal(T, cfg.threads)) gens.push_back(c.cls);
    bool strict;
    auto Q = detail::build_quotient(T.base->ring, gens, {"a1"}, dmax, strict);
    sec.data["degree"] = 3;
    sec.data["genus"] = cfg.genus_json();
    sec.data["quotient"] = detail::quotient_json(Q, strict);
    if (!cfg.genus && dmax >= 4) {
        auto want = Golden::get().ints("deg3", "dims.symbolic");
        auto got = Q.dims();
        got.resize(want.size());
        sec.check("deg3.dims.symbolic", got == want, detail::dims_str(want), detail::dims_str(got));
    }
    sec.seconds = sw.seconds();
    return sec;
}

/// Chow rings at fixed genera, with the low-genus extra classes.
inline Section deg3_chow_section(const std::vector<long>& genera, int threads)
{
    detail::Stopwatch sw;
    Section sec;
    sec.name = "deg3.chow";
    const auto& G = Golden::get();
    ojson rows = ojson::array();
    for (long g : genera) {
        auto R = deg3_chow(g, threads);
        ojson row;
        row["genus"] = g;
        ojson extra = ojson::array();
        for (const auto& [n, c] : R.extra) extra.push_back(n + " = " + c.to_string());
        row["extra_classes"] = extra;
        row["dims"] = R.dims;
        row["presentation"] = R.presentation;
        rows.push_back(row);
        const auto& pres = G.at("deg3", "presentation");
        if (pres.contains(std::to_string(g))) {
            auto want = pres.at(std::to_string(g)).get<std::string>();
            sec.check("deg3.chow.g" + std::to_string(g), R.presentation == want, want, R.presentation);
        }
        if (g == 2 || g == 3 || g == 5) {
            auto key = g == 2 ? "g2.split.1.3" : g == 3 ? "g3.split.1.4" : "g5.split.2.5";
            check_class(sec, std::string("deg3.") + key, R.extra.at(0).second, "deg3", key, g);
        }
        if (g == 4) {
            int want = G.at("deg3", "g4.codim2").get<int>();
            int got = R.dims.size() > 2 ? R.dims[2] : 0;
            sec.check("deg3.g4.codim2", got == want, std::to_string(want), std::to_string(got),
                      "codimension-2 part after adding the correction class");
        }
    }
    sec.data["rings"] = rows;
    sec.seconds = sw.seconds();
    return sec;
}

// ---------------------------------------------------------------------------
// Degree 4

struct Deg4Run {
    RunConfig cfg;
    Deg4Tower T;
    std::vector<IndexedClass> gens;
    RingPtr<GR> R;
    std::optional<GradedQuotient<GR>> Q;
    bool strict = true;
    double seconds = 0;
};

inline Deg4Run deg4_run(const RunConfig& cfg)
{
    detail::Stopwatch sw;
    Deg4Run r;
    r.cfg = cfg;
    int cut = cfg.cut ? cfg.cut : 6;
    if (cut < 6) throw RingError("the degree-4 ideal needs base cut at least 6");
    int dmax = cfg.max_codim ? cfg.max_codim : 8;
    r.T = deg4_tower(cfg.mode(), cut);
    r.gens = deg4_ideal(r.T, cfg.threads);
    r.R = Ring<GR>::make(deg4_base_generators(), dmax);
    std::vector<GradedClass<GR>> I;
    for (const auto& g : r.gens) I.push_back(detail::into(g.cls, r.R));
    r.Q = detail::build_quotient(r.R, I, {"a1", "a2'", "a3'"}, dmax, r.strict);
    r.seconds = sw.seconds();
    return r;
}

inline Section deg4_relations(const Deg4Run& r)
{
    Section sec;
    sec.name = "deg4.relations";
    sec.data["degree"] = 4;
    sec.data["genus"] = r.cfg.genus_json();
    sec.data["cut"] = r.T.base->ring->cut();
    sec.data["count"] = r.gens.size();
    sec.data["generators"] = detail::generators_json(r.gens);
    return sec;
}

inline Section deg4_ideal_section(const Deg4Run& r)
{
    Section sec = deg4_relations(r);
    sec.name = "deg4.ideal";
    sec.seconds = r.seconds;
    const auto& G = Golden::get();
    const auto& Q = *r.Q;
    sec.data["quotient"] = detail::quotient_json(Q, r.strict);
    auto g = r.cfg.genus;
    long want_n = G.at("deg4", "generator.count").get<long>();
    sec.check("deg4.generator.count", static_cast<long>(r.gens.size()) == want_n, std::to_string(want_n),
              std::to_string(r.gens.size()));
    check_class(sec, "deg4.generator.0.0.0", r.gens.at(0).cls, "deg4", "generator.0.0.0", g);
    bool polynomial = true;
    for (const auto& c : r.gens)
        for (const auto& [m, q] : c.cls.terms()) polynomial = polynomial && q.is_polynomial();
    sec.check("deg4.generators.polynomial", polynomial, "no denominators in g");
    if (!g) {
        auto want = G.ints("deg4", "dims");
        auto got = Q.dims();
        got.resize(std::min(got.size(), want.size()));
        want.resize(got.size());
        sec.check("deg4.dims", got == want, detail::dims_str(want), detail::dims_str(got));
        int stable = G.at("deg4", "dims.stable").get<int>();
        for (int d = static_cast<int>(want.size()) + 1; d <= Q.dmax(); ++d)
            sec.check("deg4.dims.stable." + std::to_string(d), Q.dim(d) == stable, std::to_string(stable),
                      std::to_string(Q.dim(d)));
    }
    return sec;
}

inline Section deg4_presentation_section(const Deg4Run& r)
{
    detail::Stopwatch sw;
    Section sec;
    sec.name = "deg4.presentation";
    const auto& G = Golden::get();
    const auto& Q = *r.Q;
    auto g = r.cfg.genus;
    auto rels = G.strings("deg4", "relations");
    for (std::size_t i = 0; i < rels.size(); ++i) {
        auto cls = parse_class<GR>(rels[i], r.R, g);
        sec.check("deg4.r" + std::to_string(i + 1) + ".in_ideal", Q.contains(cls), "0",
                  Q.normal_form(cls).to_string(), "normal form modulo the computed ideal");
    }
    int top = std::min(6, Q.dmax());
    auto pd = detail::presentation_dims({{"a1", 1}, {"a2'", 1}, {"a3'", 2}}, rels, top, g);
    auto qd = Q.dims();
    qd.resize(top);
    sec.data["presentation_dims"] = pd;
    sec.data["ideal_dims"] = qd;
    sec.check("deg4.presentation.dims", pd == qd, detail::dims_str(pd), detail::dims_str(qd),
              "equal dimensions plus containment give equal ideals");
    if (!g) {
        // Spot check: the pipeline run at g = 100 matches the symbolic run specialized.
        const long g0 = 100;
        auto T0 = deg4_tower(GenusMode::at(g0), r.T.base->ring->cut());
        auto I0 = deg4_ideal(T0, r.cfg.threads);
        bool same = I0.size() == r.gens.size();
        for (std::size_t i = 0; same && i < I0.size(); ++i)
            same = I0[i].cls == detail::into(specialize_class(r.gens[i].cls, g0), T0.base->ring);
        sec.check("deg4.spot.g100.generators", same, "specialized symbolic generators", same ? "equal" : "differ");
        std::vector<GradedClass<GR>> gens0;
        for (const auto& c : I0) gens0.push_back(c.cls);
        bool strict0;
        auto Q0 = detail::build_quotient(T0.base->ring, gens0, {"a1", "a2'", "a3'"}, top, strict0);
        bool in = true;
        for (const auto& s : rels) in = in && Q0.contains(parse_class<GR>(s, T0.base->ring, g0));
        sec.check("deg4.spot.g100.relations", in, "r1..r4 in the g = 100 ideal", in ? "contained" : "not contained");
    }
    sec.seconds = sw.seconds();
    return sec;
}

inline Section deg4_classes_section(const Deg4Run& r)
{
    detail::Stopwatch sw;
    Section sec;
    sec.name = "deg4.classes";
    const auto& G = Golden::get();
    const auto& Q = *r.Q;
    const auto& R = r.R;
    auto g = r.cfg.genus;
    auto P = [&](const std::string& key) { return parse_class<GR>(G.value("deg4", key), R, g); };

    auto k1 = detail::into(deg4_kappa(r.cfg.mode(), 1), R);
    auto k2 = detail::into(deg4_kappa(r.cfg.mode(), 2), R);
    auto U = detail::into(deg4_U(r.T), R);
    auto T = P("T"), D = P("D");
    auto c2 = R->gen("c2");

    ojson table = ojson::array();
    auto row = [&](const std::string& name, const GradedClass<GR>& raw, const std::string& source) {
        table.push_back({{"class", name}, {"raw", raw.to_string()}, {"reduced", Q.normal_form(raw).to_string()},
                         {"source", source}});
    };
    row("kappa1", k1, "curve class");
    row("kappa2", k2, "curve class");
    row("T", T, "reference");
    row("D", D, "reference");
    row("U", U, "mixed jet, rank 7");
    row("c2", c2, "generator");
    sec.data["classes"] = table;

    check_class(sec, "deg4.kappa1", Q.normal_form(k1), "deg4", "kappa1", g);
    check_class(sec, "deg4.kappa2.raw", k2, "deg4", "kappa2.raw", g);
    check_class(sec, "deg4.kappa2.reduced", Q.normal_form(k2), "deg4", "kappa2.reduced", g);
    detail::check_class_mod(sec, "deg4.U.raw", Q, U, "deg4", "U.raw", g);
    check_class(sec, "deg4.U.reduced", Q.normal_form(U), "deg4", "U.reduced", g);
    check_class(sec, "deg4.c2.reduced", Q.normal_form(c2), "deg4", "c2.reduced", g);

    // Reference bases and spanning determinants.
    std::map<std::string, GradedClass<GR>> vals{{"T", T}, {"D", D}, {"U", U}, {"kappa1", k1}};
    const auto& basis = G.at("deg4", "basis");
    const auto& spanning = G.at("deg4", "spanning");
    ojson rows = ojson::array();
    for (const auto& [key, words] : spanning.items()) {
        int d = std::stoi(key);
        if (d > Q.dmax()) continue;
        auto B = detail::parse_all(basis.at(std::to_string(d)).get<std::vector<std::string>>(), R, g);
        bool isbasis = static_cast<int>(B.size()) == Q.dim(d) && Q.spans(d, B);
        if (key.find('.') == std::string::npos)
            sec.check("deg4.basis." + key, isbasis, "basis of codimension " + key,
                      "rank " + std::to_string(Q.span_rank(d, B)) + " of " + std::to_string(Q.dim(d)));
        if (!isbasis) continue;
        auto W = words.get<std::vector<std::string>>();
        std::vector<GradedClass<GR>> S;
        for (const auto& w : W) S.push_back(detail::eval_word(w, vals, R));
        const auto& roots = G.at("deg4", "spanning.roots");
        detail::check_spanning(sec, "deg4.spanning." + key, Q, d, W, S, B, rows,
                               roots.contains(key) ? &roots.at(key) : nullptr);
    }
    sec.data["spanning"] = rows;

    // kappa1^i is a nonzero multiple of a2'^i in high degree.
    ojson powers = ojson::array();
    for (int i = 5; i <= Q.dmax(); ++i) {
        auto nf = Q.normal_form(k1.pow(i));
        auto a2i = R->gen("a2'").pow(i);
        bool ok = nf.terms().size() == 1 && nf.terms()[0].first == a2i.terms()[0].first;
        powers.push_back({{"i", i}, {"kappa1^i", nf.to_string()}});
        sec.check("deg4.kappa1^" + std::to_string(i), ok, "nonzero multiple of a2'^" + std::to_string(i),
                  nf.to_string());
    }
    sec.data["kappa1_powers"] = powers;
    sec.seconds = sw.seconds();
    return sec;
}

// ---------------------------------------------------------------------------
// Degree 5

struct Deg5Run {
    RunConfig cfg;
    Deg5Base B;
    std::vector<IndexedClass> sing, ni;
    std::optional<GradedQuotient<GR>> Q;
    bool strict = true;
    double seconds = 0;
};

inline int deg5_default_cut(const RunConfig& cfg) { return cfg.cut ? cfg.cut : cfg.deep ? 10 : 7; }

inline Deg5Run deg5_run(const RunConfig& cfg, bool with_ni = true)
{
    detail::Stopwatch sw;
    Deg5Run r;
    r.cfg = cfg;
    int cut = deg5_default_cut(cfg);
    if (cut < 6) throw RingError("the degree-5 ideals need base cut at least 6");
    int dmax = cfg.max_codim ? std::min(cfg.max_codim, cut) : cut;
    r.B = deg5_base(cfg.mode(), cut);
    r.sing = deg5_sing_ideal(r.B, cfg.threads);
    if (with_ni) r.ni = deg5_ni_ideal(r.B, cfg.threads);
    std::vector<GradedClass<GR>> I;
    for (const auto& c : r.sing) I.push_back(c.cls);
    r.Q = detail::build_quotient(r.B.base->ring, I, {"a1", "a2'", "a2", "c2"}, dmax, r.strict);
    r.seconds = sw.seconds();
    return r;
}

inline const IndexedClass& deg5_all_zero(const Deg5Run& r)
{
    for (const auto& c : r.sing)
        if (std::all_of(c.index.begin(), c.index.end(), [](int x) { return x == 0; })) return c;
    throw RingError("no all-zero generator");
}

inline Section deg5_relations(const Deg5Run& r)
{
    Section sec;
    sec.name = "deg5.relations";
    sec.data["degree"] = 5;
    sec.data["genus"] = r.cfg.genus_json();
    sec.data["cut"] = r.B.base->ring->cut();
    sec.data["count"] = r.sing.size();
    sec.data["generators"] = detail::generators_json(r.sing);
    return sec;
}

inline Section deg5_ni_section(const Deg5Run& r)
{
    Section sec;
    sec.name = "deg5.ni";
    const auto& Q = *r.Q;
    sec.data["generators"] = detail::generators_json(r.ni);
    long want = Golden::get().at("deg5", "ni.count").get<long>();
    sec.check("deg5.ni.count", static_cast<long>(r.ni.size()) == want, std::to_string(want),
              std::to_string(r.ni.size()));
    for (const auto& c : r.ni)
        sec.check("deg5.ni." + c.label + ".in_singular_ideal", Q.contains(c.cls), "0",
                  Q.normal_form(c.cls).to_string(),
                  c.cls.is_zero() ? "degree beyond the cut" : "degree " + std::to_string(c.cls.max_degree()));
    return sec;
}

inline Section deg5_ideal_section(const Deg5Run& r)
{
    Section sec;
    sec.name = "deg5.ideal";
    sec.seconds = r.seconds;
    const auto& G = Golden::get();
    const auto& Q = *r.Q;
    auto g = r.cfg.genus;
    sec.data["cut"] = r.B.base->ring->cut();
    sec.data["singular_generators"] = r.sing.size();
    sec.data["quotient"] = detail::quotient_json(Q, r.strict);
    check_class(sec, "deg5.generator.0", deg5_all_zero(r).cls, "deg5", "generator.0", g);
    if (!g) {
        auto want = G.ints("deg5", "dims");
        auto got = Q.dims();
        got.resize(std::min(got.size(), want.size()));
        want.resize(got.size());
        sec.check("deg5.dims", got == want, detail::dims_str(want), detail::dims_str(got));
        int stable = G.at("deg5", "dims.stable").get<int>();
        for (int d = static_cast<int>(want.size()) + 1; d <= Q.dmax(); ++d)
            sec.check("deg5.dims.stable." + std::to_string(d), Q.dim(d) == stable, std::to_string(stable),
                      std::to_string(Q.dim(d)));
    }
    return sec;
}

inline Section deg5_presentation_section(const Deg5Run& r)
{
    detail::Stopwatch sw;
    Section sec;
    sec.name = "deg5.presentation";
    const auto& Q = *r.Q;
    const auto& R = Q.ring();
    auto g = r.cfg.genus;
    auto rels = Golden::get().strings("deg5", "relations");
    for (std::size_t i = 0; i < rels.size(); ++i) {
        auto cls = parse_class<GR>(rels[i], R, g);
        sec.check("deg5.r" + std::to_string(i + 1) + ".in_ideal", Q.contains(cls), "0",
                  Q.normal_form(cls).to_string(), "normal form modulo the computed ideal");
    }
    int top = std::min(7, Q.dmax());
    auto pd = detail::presentation_dims({{"a1", 1}, {"a2'", 1}, {"a2", 2}, {"c2", 2}}, rels, top, g);
    auto qd = Q.dims();
    qd.resize(top);
    sec.data["presentation_dims"] = pd;
    sec.data["ideal_dims"] = qd;
    sec.check("deg5.presentation.dims", pd == qd, detail::dims_str(pd), detail::dims_str(qd),
              "equal dimensions plus containment give equal ideals");
    if (!g) {
        const long g0 = 100;
        auto B0 = deg5_base(GenusMode::at(g0), r.B.base->ring->cut());
        auto S0 = deg5_sing_ideal(B0, r.cfg.threads);
        bool same = S0.size() == r.sing.size();
        for (std::size_t i = 0; same && i < S0.size(); ++i)
            same = S0[i].cls == detail::into(specialize_class(r.sing[i].cls, g0), B0.base->ring);
        sec.check("deg5.spot.g100.generators", same, "specialized symbolic generators", same ? "equal" : "differ");
        std::vector<GradedClass<GR>> gens0;
        for (const auto& c : S0) gens0.push_back(c.cls);
        bool strict0;
        auto Q0 = detail::build_quotient(B0.base->ring, gens0, {"a1", "a2'", "a2", "c2"}, top, strict0);
        bool in = true;
        for (const auto& s : rels) in = in && Q0.contains(parse_class<GR>(s, B0.base->ring, g0));
        sec.check("deg5.spot.g100.relations", in, "r1..r5 in the g = 100 ideal", in ? "contained" : "not contained");
    }
    sec.seconds = sw.seconds();
    return sec;
}

inline Section deg5_classes_section(const Deg5Run& r)
{
    detail::Stopwatch sw;
    Section sec;
    sec.name = "deg5.classes";
    const auto& G = Golden::get();
    const auto& Q = *r.Q;
    const auto& R = Q.ring();
    auto g = r.cfg.genus;
    auto mode = r.cfg.mode();

    auto k1 = detail::into(deg5_kappa(mode, 1), R);
    auto k2 = detail::into(deg5_kappa(mode, 2), R);
    auto tri = deg5_triple_class_suite(mode, 2);
    auto T = detail::into(tri.T, R), U = detail::into(tri.U, R), X = detail::into(tri.extra, R);
    auto D = parse_class<GR>(G.value("deg5", "D"), R, g);

    ojson table = ojson::array();
    auto row = [&](const std::string& name, const GradedClass<GR>& raw, const std::string& source) {
        table.push_back({{"class", name}, {"raw", raw.to_string()}, {"reduced", Q.normal_form(raw).to_string()},
                         {"source", source}});
    };
    row("kappa1", k1, "curve class");
    row("kappa2", k2, "curve class");
    row("T", T, "mixed jet, rank " + std::to_string(tri.rank));
    row("D", D, "reference");
    row("U", U, "mixed jet, rank " + std::to_string(tri.rank));
    row("extra", X, "mixed jet, rank " + std::to_string(tri.rank));
    sec.data["classes"] = table;

    sec.check("deg5.M.rank", tri.rank == 18, "18", std::to_string(tri.rank));
    check_class(sec, "deg5.kappa1", Q.normal_form(k1), "deg5", "kappa1", g);
    check_class(sec, "deg5.kappa2.raw", k2, "deg5", "kappa2.raw", g);
    check_class(sec, "deg5.kappa2.reduced", Q.normal_form(k2), "deg5", "kappa2.reduced", g);
    check_class(sec, "deg5.T", Q.normal_form(T), "deg5", "T", g);
    check_class(sec, "deg5.U.raw", U, "deg5", "U.raw", g);
    check_class(sec, "deg5.U.reduced", Q.normal_form(U), "deg5", "U.reduced", g);
    check_class(sec, "deg5.extra.raw", X, "deg5", "extra.raw", g);
    check_class(sec, "deg5.extra.reduced", Q.normal_form(X), "deg5", "extra.reduced", g);

    // [U] and the extra class are independent modulo products of degree-1 classes.
    auto a1 = R->gen("a1"), a2p = R->gen("a2'");
    std::vector<GradedClass<GR>> prods{a1 * a1, a1 * a2p, a2p * a2p};
    int base_rank = Q.span_rank(2, prods);
    prods.push_back(U);
    prods.push_back(X);
    int rank = Q.span_rank(2, prods);
    sec.check("deg5.U_extra.independent", rank == base_rank + 2, std::to_string(base_rank + 2),
              std::to_string(rank), "rank in codimension 2 with a1^2, a1a2', a2'^2");

    // Reference bases, completed where the printed set is not a basis.
    const auto& basis = G.at("deg5", "basis");
    const auto& completion = G.at("deg5", "basis.completion");
    std::map<int, std::vector<GradedClass<GR>>> bases;
    for (int d = 1; d <= std::min(6, Q.dmax()); ++d) {
        auto words = basis.at(std::to_string(d)).get<std::vector<std::string>>();
        std::vector<GradedClass<GR>> B;
        std::vector<std::string> dropped;
        for (const auto& w : words) {
            auto c = parse_class<GR>(w, R, g);
            if (c.is_homogeneous() && c.min_degree() == d) B.push_back(c);
            else dropped.push_back(w);
        }
        std::vector<std::string> added;
        if (completion.contains(std::to_string(d)))
            for (const auto& w : completion.at(std::to_string(d)).get<std::vector<std::string>>()) {
                B.push_back(parse_class<GR>(w, R, g));
                added.push_back(w);
            }
        int rk = Q.span_rank(d, B);
        bool isbasis = static_cast<int>(B.size()) == Q.dim(d) && rk == Q.dim(d);
        auto& c = sec.check("deg5.basis." + std::to_string(d), isbasis && dropped.empty() && added.empty(),
                            "basis of codimension " + std::to_string(d) + ": " + detail::join(words),
                            "rank " + std::to_string(rk) + " of " + std::to_string(Q.dim(d)));
        if (isbasis && (!dropped.empty() || !added.empty())) {
            c.status = Status::Erratum;
            std::string note = "printed set is not a basis";
            if (!dropped.empty()) note += "; dropped " + detail::join(dropped) + " (wrong codimension)";
            if (!added.empty()) note += "; completed with " + detail::join(added);
            c.note = note;
        }
        if (isbasis) bases[d] = B;
    }
    for (int d = 7; d <= Q.dmax(); ++d) {
        std::vector<GradedClass<GR>> B;
        for (const auto& w : basis.at("stable").get<std::vector<std::string>>())
            B.push_back(parse_class<GR>(detail::monomial_word(w, d), R, g));
        bool isbasis = static_cast<int>(B.size()) == Q.dim(d) && Q.spans(d, B);
        sec.check("deg5.basis." + std::to_string(d), isbasis, "basis of codimension " + std::to_string(d),
                  "rank " + std::to_string(Q.span_rank(d, B)) + " of " + std::to_string(Q.dim(d)));
        if (isbasis) bases[d] = B;
    }

    // Spanning determinants.
    std::map<std::string, GradedClass<GR>> vals{{"T", T}, {"D", D}, {"U", U}, {"kappa1", k1}, {"kappa2", k2}};
    const auto& spanning = G.at("deg5", "spanning");
    ojson rows = ojson::array();
    for (const auto& [key, words] : spanning.items()) {
        if (key == "stable") continue;
        int d = std::stoi(key);
        if (!bases.count(d)) continue;
        auto W = words.get<std::vector<std::string>>();
        std::vector<GradedClass<GR>> S;
        for (const auto& w : W) S.push_back(detail::eval_word(w, vals, R));
        detail::check_spanning(sec, "deg5.spanning." + key, Q, d, W, S, bases[d], rows);
    }
    for (int d = 7; d <= Q.dmax(); ++d) {
        if (!bases.count(d)) continue;
        std::vector<std::string> W;
        std::vector<GradedClass<GR>> S;
        for (const auto& w : spanning.at("stable").get<std::vector<std::string>>()) {
            W.push_back(detail::monomial_word(w, d));
            S.push_back(detail::eval_word(W.back(), vals, R));
        }
        detail::check_spanning(sec, "deg5.spanning." + std::to_string(d), Q, d, W, S, bases[d], rows);
    }
    sec.data["spanning"] = rows;

    if (bases.count(1)) {
        auto det = determinant(Q.matrix_in_basis(1, {T, D}, bases[1]));
        auto want = G.value("deg5", "det.1");
        auto rep = DeterminantReport::of(det);
        bool ok = det == parse_class<GR>(want, R, g).constant_term() && rep.roots.empty();
        sec.check("deg5.det.1", ok, want + ", no integer roots", det.to_string());
    }
    sec.seconds = sw.seconds();
    return sec;
}

// ---------------------------------------------------------------------------
// Engine properties (no reference values)

namespace detail {

/// Number of Schubert paths: sigma_{k_1} ... sigma_{k_m} on G(2, n) by Pieri.
inline long pieri_integral(int n, const std::vector<int>& ks)
{
    const int w = n - 2;
    std::map<std::pair<int, int>, long> cur{{{0, 0}, 1}};
    for (int k : ks) {
        std::map<std::pair<int, int>, long> next;
        for (auto [ab, c] : cur) {
            auto [a, b] = ab;
            for (int a2 = a; a2 <= w; ++a2) {
                int b2 = a + b + k - a2;
                if (b2 < b || b2 > a) continue;
                next[{a2, b2}] += c;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find({w, w});
    return it == cur.end() ? 0 : it->second;
}

inline void sigma_words(int n, int left, int maxk, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (left == 0) { out.push_back(cur); return; }
    for (int k = std::min(left, maxk); k >= 1; --k) {
        cur.push_back(k);
        sigma_words(n, left - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

inline Section engine_schur_section()
{
    detail::Stopwatch sw;
    using Q = Rational;
    Section sec;
    sec.name = "engine.schur";
    ojson rows = ojson::array();
    for (int r = 1; r <= 5; ++r) {
        std::vector<Generator> gens;
        for (int i = 1; i <= r; ++i) gens.push_back({"x" + std::to_string(i), 1});
        auto S = base_new<Q>(GenusMode::symbolic(), gens, 6);
        std::vector<GradedClass<Q>> x;
        auto E = trivial_bundle(S, 0);
        for (const auto& gn : gens) {
            x.push_back(S->gen(gn.name));
            E = direct_sum(E, line_bundle(S, x.back()));
        }
        for (int k = 1; k <= 4; ++k) {
            for (bool wedge_k : {false, true}) {
                if (wedge_k && k > r) continue;
                // Roots of Sym^k / wedge^k are sums over multisets / subsets.
                auto prod = S->one();
                long count = 0;
                std::function<void(int, int, GradedClass<Q>)> rec = [&](int start, int left, GradedClass<Q> acc) {
                    if (left == 0) { prod = prod * (S->one() + acc); ++count; return; }
                    for (int i = start; i < r; ++i) rec(wedge_k ? i + 1 : i, left - 1, acc + x[i]);
                };
                rec(0, k, GradedClass<Q>(S->ring));
                auto B = wedge_k ? wedge(k, E) : sym(k, E);
                bool ok = B.chern == prod && B.rank == count;
                std::string id = std::string(wedge_k ? "wedge" : "sym") + std::to_string(k) + ".rank" + std::to_string(r);
                sec.check("engine.schur." + id, ok, "root product", ok ? "agrees" : "differs");
                rows.push_back({{"functor", wedge_k ? "wedge" : "sym"}, {"k", k}, {"rank", r}, {"bundle_rank", B.rank}});
            }
        }
    }
    sec.data["cases"] = rows;
    sec.seconds = sw.seconds();
    return sec;
}

inline Section engine_grassmann_section()
{
    detail::Stopwatch sw;
    using Q = Rational;
    Section sec;
    sec.name = "engine.grassmann";
    ojson rows = ojson::array();
    auto pt = base_new<Q>(GenusMode::symbolic(), {}, 1);
    for (int n : {4, 5}) {
        auto G = grass2_bundle(pt, trivial_bundle(pt, n));
        int dim = 2 * (n - 2);
        std::vector<std::vector<int>> words;
        std::vector<int> cur;
        detail::sigma_words(n, dim, n - 2, cur, words);
        for (const auto& w : words) {
            auto cls = G->one();
            std::string name;
            for (int k : w) {
                cls = cls * G->tautological("sigma" + std::to_string(k));
                name += "s" + std::to_string(k);
            }
            auto got = pushforward(G, pt, cls).constant_term();
            long want = detail::pieri_integral(n, w);
            sec.check("engine.grassmann.G2" + std::to_string(n) + "." + name, got == Q(want), std::to_string(want),
                      rational_str(got));
            rows.push_back({{"space", "G(2," + std::to_string(n) + ")"}, {"monomial", name}, {"integral", want}});
        }
    }
    sec.data["integrals"] = rows;
    sec.seconds = sw.seconds();
    return sec;
}

inline Section engine_projection_section(int instances = 100)
{
    detail::Stopwatch sw;
    using Q = Rational;
    Section sec;
    sec.name = "engine.projection";
    auto B = base_new<Q>(GenusMode::symbolic(), {{"a", 1}, {"b", 2}}, 5);
    auto E = bundle_from_classes(B, {B->gen("a"), B->gen("b"), B->gen("a") * B->gen("b")});
    auto P = proj_bundle(B, E);
    auto G = grass2_bundle(P, direct_sum(rel_tangent(P, B), line_bundle(P, P->gen("zeta"))));
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> c(-3, 3), e(0, 3);
    std::vector<GradedClass<Q>> up{G->gen("h1"), G->gen("h2"), P->gen("zeta")};
    std::vector<GradedClass<Q>> down{B->gen("a"), B->gen("b")};
    int ok = 0;
    for (int it = 0; it < instances; ++it) {
        auto x = G->one().scaled(Q(c(rng)));
        for (const auto& u : up) x = x * (G->one() + u.pow(e(rng)).scaled(Q(c(rng))));
        auto b = B->one().scaled(Q(c(rng)));
        for (const auto& d : down) b = b + d.pow(e(rng)).scaled(Q(c(rng)));
        ok += pushforward(G, B, x * b) == pushforward(G, B, x) * b;
    }
    sec.data["instances"] = instances;
    sec.data["tower"] = "G(2, T + O(1)) over P(E) over a base with cut 5";
    sec.check("engine.projection.formula", ok == instances, std::to_string(instances), std::to_string(ok));
    sec.seconds = sw.seconds();
    return sec;
}

inline Section engine_grr_section()
{
    detail::Stopwatch sw;
    using Q = Rational;
    Section sec;
    sec.name = "engine.grr";
    auto B = base_new<Q>(GenusMode::symbolic(), {{"a", 1}}, 4);
    auto P = p1_bundle(B);
    auto z = P->gen("z");
    ojson rows = ojson::array();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> deg(-1, 5), rk(1, 3);
    for (int it = 0; it < 12; ++it) {
        int r = rk(rng);
        auto V = trivial_bundle(P, 0);
        long d = 0;
        std::vector<int> ds;
        for (int i = 0; i < r; ++i) {
            int di = deg(rng);
            ds.push_back(di);
            d += di;
            V = direct_sum(V, line_bundle(P, z.scaled(Q(di)) + P->gen("a").scaled(Q(i))));
        }
        auto pushed = grr_pushforward(P, V);
        sec.check("engine.grr.case" + std::to_string(it), pushed.rank == d + r, std::to_string(d + r),
                  std::to_string(pushed.rank), "fiber degrees " + detail::dims_str(ds));
        rows.push_back({{"degrees", ds}, {"chi", d + r}});
    }
    sec.data["cases"] = rows;
    sec.seconds = sw.seconds();
    return sec;
}

// ---------------------------------------------------------------------------
// Suites

inline std::vector<std::string> suite_names() { return {"deg3", "deg4", "deg5", "engine", "paper", "all"}; }

/// Run the named suite. `sink` receives each section as it completes.
inline Report verify_suite(const std::string& suite, const RunConfig& cfg,
                           const std::function<void(const Section&)>& sink = {})
{
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("unknown suite " + suite);
    Report rep;
    rep.command = "verify " + suite;
    auto add = [&](Section s) {
        if (sink) sink(s);
        rep.sections.push_back(std::move(s));
    };
    bool paper = suite == "paper" || suite == "all";
    RunConfig sym = cfg;
    sym.genus.reset();
    if (paper || suite == "deg3") {
        add(deg3_relations(sym));
        add(deg3_dims(sym));
        RunConfig g2 = sym;
        g2.genus = 2;
        add(deg3_relations(g2));
        add(deg3_chow_section({2, 3, 4, 5, 6, 7, 8}, cfg.threads));
    }
    if (paper || suite == "deg4") {
        auto r = deg4_run(sym);
        add(deg4_ideal_section(r));
        add(deg4_presentation_section(r));
        add(deg4_classes_section(r));
    }
    if (paper || suite == "deg5") {
        auto r = deg5_run(sym);
        add(deg5_ideal_section(r));
        add(deg5_ni_section(r));
        add(deg5_presentation_section(r));
        add(deg5_classes_section(r));
    }
    if (suite == "engine" || suite == "all") {
        add(engine_schur_section());
        add(engine_grassmann_section());
        add(engine_projection_section());
        add(engine_grr_section());
    }
    return rep;
}

} // namespace hurwitz
