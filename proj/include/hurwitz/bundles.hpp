#pragma once

#include "tower.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

namespace hurwitz {

/// Formal vector bundle or K-class on a space: rank plus total Chern class.
template <class C>
struct VBundle {
    SpacePtr<C> space;
    int rank = 0;
    GradedClass<C> chern;
    bool is_virtual = false;
    bool zero_flag = false;

    const RingPtr<C>& ring() const { return chern.ring(); }
    GradedClass<C> c(int i) const
    {
        if (i < 0 || i > ring()->cut()) return GradedClass<C>(ring());
        return chern.graded_part(i);
    }
    GradedClass<C> c1() const { return c(1); }
    GradedClass<C> top() const { return c(rank); }
};

namespace detail {

template <class C>
std::vector<GradedClass<C>> pieces(const GradedClass<C>& a, int dmax)
{
    std::vector<GradedClass<C>> out(dmax + 1, GradedClass<C>(a.ring()));
    std::vector<std::vector<Term<C>>> buckets(dmax + 1);
    for (const auto& t : a.terms()) {
        int d = a.ring()->degree(t.first);
        if (d <= dmax) buckets[d].push_back(t);
    }
    for (int d = 0; d <= dmax; ++d) {
        TermMap<C> acc;
        for (auto& t : buckets[d]) acc[t.first] = t.second;
        out[d] = GradedClass<C>::from_map(a.ring(), std::move(acc));
    }
    return out;
}

template <class C>
GradedClass<C> sum_pieces(const std::vector<GradedClass<C>>& p, const RingPtr<C>& ring)
{
    TermMap<C> acc;
    for (const auto& x : p)
        for (const auto& [m, c] : x.terms()) acc[m] += c;
    return GradedClass<C>::from_map(ring, std::move(acc));
}

inline Rational factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

inline Rational binomial(long n, long k)
{
    if (k < 0) return 0;
    Rational r = 1;
    for (long i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

/// Power sums p_1..p_dmax of the Chern roots (p_0 is left as zero).
template <class C>
std::vector<GradedClass<C>> power_sums(const std::vector<GradedClass<C>>& c, int dmax)
{
    const auto& ring = c[0].ring();
    std::vector<GradedClass<C>> p(dmax + 1, GradedClass<C>(ring));
    for (int k = 1; k <= dmax; ++k) {
        GradedClass<C> acc = c[k].scaled(C((k % 2 ? 1 : -1) * k));
        for (int i = 1; i < k; ++i) {
            if (c[i].is_zero() || p[k - i].is_zero()) continue;
            auto prod = GradedClass<C>::multiply(c[i], p[k - i], k);
            acc = (i % 2) ? acc + prod : acc - prod;
        }
        p[k] = acc;
    }
    return p;
}

/// Elementary classes from power sums: c_k = (1/k) sum (-1)^{i-1} c_{k-i} p_i.
template <class C>
std::vector<GradedClass<C>> elementary_from_power_sums(const std::vector<GradedClass<C>>& p, int dmax)
{
    const auto& ring = p[0].ring();
    std::vector<GradedClass<C>> c(dmax + 1, GradedClass<C>(ring));
    c[0] = ring->one();
    for (int k = 1; k <= dmax; ++k) {
        GradedClass<C> acc(ring);
        for (int i = 1; i <= k; ++i) {
            if (p[i].is_zero() || c[k - i].is_zero()) continue;
            auto prod = GradedClass<C>::multiply(c[k - i], p[i], k);
            acc = (i % 2) ? acc + prod : acc - prod;
        }
        c[k] = acc.scaled(C(Rational(1, k)));
    }
    return c;
}

/// Cycle-index coefficients: ch(Sym^k) = sum_l coef * prod psi^{l_i}(ch), and the
/// signed version for wedge powers. Memoized; optionally persisted in the
/// directory named by HURWITZ_CHOW_CACHE.
class PlethysmTable {
public:
    using Entry = std::vector<std::pair<std::vector<int>, Rational>>;

    static PlethysmTable& instance()
    {
        static PlethysmTable t;
        return t;
    }

    Entry get(bool wedge, int k)
    {
        std::string key = std::string(wedge ? "wedge" : "sym") + std::to_string(k);
        std::lock_guard<std::mutex> lock(mu_);
        load_once();
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Entry e = compute(wedge, k);
        memo_[key] = e;
        store();
        return e;
    }

private:
    static void partitions(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out)
    {
        if (n == 0) { out.push_back(cur); return; }
        for (int p = std::min(n, maxpart); p >= 1; --p) {
            cur.push_back(p);
            partitions(n - p, p, cur, out);
            cur.pop_back();
        }
    }
    static Entry compute(bool wedge, int k)
    {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions(k, k, cur, parts);
        Entry e;
        for (const auto& lam : parts) {
            // z_lambda = prod_i i^{m_i} m_i!
            std::map<int, int> mult;
            for (int x : lam) ++mult[x];
            Integer z = 1;
            for (auto [i, m] : mult) {
                for (int j = 0; j < m; ++j) z *= i;
                for (int j = 2; j <= m; ++j) z *= j;
            }
            Rational coef(1, 1);
            coef /= Rational(z);
            if (wedge && ((k - static_cast<int>(lam.size())) % 2)) coef = -coef;
            e.emplace_back(lam, coef);
        }
        return e;
    }
    void load_once()
    {
        if (loaded_) return;
        loaded_ = true;
        const char* dir = std::getenv("HURWITZ_CHOW_CACHE");
        if (!dir || !*dir) return;
        path_ = std::filesystem::path(dir) / "plethysm.json";
        std::ifstream in(path_);
        if (!in) return;
        try {
            auto j = nlohmann::json::parse(in);
            for (const auto& [key, arr] : j.items()) {
                Entry e;
                for (const auto& item : arr)
                    e.emplace_back(item.at(0).get<std::vector<int>>(), parse_rational(item.at(1).get<std::string>()));
                memo_[key] = e;
            }
        } catch (const std::exception&) {
            memo_.clear();  // a corrupt cache is ignored and rewritten
        }
    }
    void store()
    {
        if (path_.empty()) return;
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [key, e] : memo_) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [lam, c] : e) arr.push_back({lam, rational_str(c)});
            j[key] = arr;
        }
        std::error_code ec;
        std::filesystem::create_directories(path_.parent_path(), ec);
        std::ofstream out(path_);
        if (out) out << j.dump(1) << "\n";
    }

    std::mutex mu_;
    bool loaded_ = false;
    std::filesystem::path path_;
    std::map<std::string, Entry> memo_;
};

} // namespace detail

template <class C>
VBundle<C> trivial_bundle(const SpacePtr<C>& S, int rank)
{
    return {S, rank, S->one(), false, false};
}

template <class C>
VBundle<C> line_bundle(const SpacePtr<C>& S, const GradedClass<C>& c1)
{
    return {S, 1, S->one() + c1.pulled(S->ring), false, false};
}

/// Bundle with prescribed Chern classes c_1..c_r.
template <class C>
VBundle<C> bundle_from_classes(const SpacePtr<C>& S, const std::vector<GradedClass<C>>& cs)
{
    GradedClass<C> total = S->one();
    for (const auto& x : cs) total += x.pulled(S->ring);
    return {S, static_cast<int>(cs.size()), total, false, false};
}

template <class C>
VBundle<C> pull_bundle(const VBundle<C>& B, const SpacePtr<C>& S)
{
    if (!S->has_ancestor(B.space.get())) throw RingError("bundle does not live on an ancestor space");
    VBundle<C> r = B;
    r.space = S;
    r.chern = B.chern.pulled(S->ring);
    return r;
}

/// Highest Chern degree worth computing for a bundle of this rank.
template <class C>
int chern_bound(const VBundle<C>& B)
{
    int cut = B.ring()->cut();
    return B.is_virtual ? cut : std::min(std::max(B.rank, 0), cut);
}

/// rank + ch_1 + ch_2 + ... up to degree dmax (default: the cut).
template <class C>
GradedClass<C> chern_character(const VBundle<C>& B, int dmax = -1)
{
    const auto& ring = B.ring();
    if (dmax < 0) dmax = ring->cut();
    auto c = detail::pieces(B.chern, dmax);
    auto p = detail::power_sums(c, dmax);
    std::vector<GradedClass<C>> ch(dmax + 1, GradedClass<C>(ring));
    ch[0] = GradedClass<C>(ring, C(B.rank));
    for (int k = 1; k <= dmax; ++k) ch[k] = p[k].scaled(C(Rational(1) / detail::factorial(k)));
    return detail::sum_pieces(ch, ring);
}

/// Inverse of chern_character. Honest bundles are truncated at their rank.
template <class C>
VBundle<C> chern_from_character(const GradedClass<C>& ch, int rank, const SpacePtr<C>& S, bool is_virtual = true,
                                int dmax = -1)
{
    const auto& ring = S->ring;
    GradedClass<C> x = ch.pulled(ring);
    if (x.constant_term() != C(rank)) throw RingError("degree-0 part of character does not match rank");
    if (dmax < 0) dmax = ring->cut();
    if (!is_virtual) dmax = std::min(dmax, std::max(rank, 0));
    auto parts = detail::pieces(x, dmax);
    std::vector<GradedClass<C>> p(dmax + 1, GradedClass<C>(ring));
    for (int k = 1; k <= dmax; ++k) p[k] = parts[k].scaled(C(detail::factorial(k)));
    auto c = detail::elementary_from_power_sums(p, dmax);
    return {S, rank, detail::sum_pieces(c, ring), is_virtual, false};
}

/// Adams operation psi^k on a Chern character.
template <class C>
GradedClass<C> adams(const GradedClass<C>& ch, int k)
{
    const auto& ring = ch.ring();
    TermMap<C> acc;
    for (const auto& [m, c] : ch.terms()) {
        int d = ring->degree(m);
        Integer f = 1;
        for (int i = 0; i < d; ++i) f *= k;
        acc[m] = c * C(Rational(f));
    }
    return GradedClass<C>::from_map(ring, std::move(acc));
}

template <class C>
VBundle<C> dual(const VBundle<C>& B)
{
    TermMap<C> acc;
    for (const auto& [m, c] : B.chern.terms()) acc[m] = (B.ring()->degree(m) % 2) ? -c : c;
    VBundle<C> r = B;
    r.chern = GradedClass<C>::from_map(B.ring(), std::move(acc));
    return r;
}

template <class C>
VBundle<C> det(const VBundle<C>& B)
{
    if (B.is_virtual) throw RingError("determinant of a virtual class");
    return {B.space, 1, B.space->one() + B.c(1), false, false};
}

/// Direct sum (character addition).
template <class C>
VBundle<C> direct_sum(const VBundle<C>& A, const VBundle<C>& B)
{
    auto chern = A.chern * B.chern;
    VBundle<C> r{A.space, A.rank + B.rank, chern, A.is_virtual || B.is_virtual, false};
    if (!r.is_virtual) r.chern = r.chern.truncated(r.rank);
    return r;
}

/// K-theory difference A - B. When `honest_rank` is set the result is known
/// to be an honest bundle and is truncated at its rank.
template <class C>
VBundle<C> difference(const VBundle<C>& A, const VBundle<C>& B, bool honest = false)
{
    const auto& ring = A.ring();
    int rank = A.rank - B.rank;
    int dmax = honest ? std::min(std::max(rank, 0), ring->cut()) : ring->cut();
    // 1/c(B) as a truncated series.
    auto b = detail::pieces(B.chern.pulled(ring), dmax);
    std::vector<GradedClass<C>> inv(dmax + 1, GradedClass<C>(ring));
    inv[0] = ring->one();
    for (int k = 1; k <= dmax; ++k) {
        GradedClass<C> acc(ring);
        for (int i = 1; i <= k; ++i) {
            if (b[i].is_zero() || inv[k - i].is_zero()) continue;
            acc -= GradedClass<C>::multiply(b[i], inv[k - i], k);
        }
        inv[k] = acc;
    }
    auto chern = GradedClass<C>::multiply(A.chern.pulled(ring), detail::sum_pieces(inv, ring), dmax);
    return {A.space, rank, chern, !honest, false};
}

namespace detail {

/// c(E (x) L) for a line bundle L with first Chern class l, up to degree dmax.
template <class C>
GradedClass<C> twist_chern(const VBundle<C>& E, const GradedClass<C>& l, int dmax)
{
    const auto& ring = E.ring();
    int r = E.rank;
    auto c = pieces(E.chern, std::min(dmax, chern_bound(E)));
    std::vector<GradedClass<C>> lp(dmax + 1, GradedClass<C>(ring));
    lp[0] = ring->one();
    for (int k = 1; k <= dmax; ++k) lp[k] = GradedClass<C>::multiply(lp[k - 1], l, dmax);
    TermMap<C> acc;
    for (int k = 0; k <= dmax; ++k)
        for (int i = 0; i <= k && i < static_cast<int>(c.size()); ++i) {
            if (c[i].is_zero()) continue;
            Rational bin = binomial(r - i, k - i);
            if (sgn(bin) == 0) continue;
            auto prod = GradedClass<C>::multiply(c[i], lp[k - i], dmax);
            C b(bin);
            for (const auto& [m, v] : prod.terms()) fma_into(acc[m], v, b);
        }
    return GradedClass<C>::from_map(ring, std::move(acc));
}

} // namespace detail

template <class C>
VBundle<C> bundle_tensor(const VBundle<C>& A, const VBundle<C>& B)
{
    if (A.ring().get() != B.ring().get()) {
        if (A.space->has_ancestor(B.space.get())) return bundle_tensor(A, pull_bundle(B, A.space));
        if (B.space->has_ancestor(A.space.get())) return bundle_tensor(pull_bundle(A, B.space), B);
        throw RingError("bundles live on different spaces");
    }
    bool virt = A.is_virtual || B.is_virtual;
    int rank = A.rank * B.rank;
    int dmax = virt ? A.ring()->cut() : std::min(std::max(rank, 0), A.ring()->cut());
    if (!B.is_virtual && B.rank == 1) return {A.space, rank, detail::twist_chern(A, B.c(1), dmax), virt, false};
    if (!A.is_virtual && A.rank == 1) return {A.space, rank, detail::twist_chern(B, A.c(1), dmax), virt, false};
    auto ch = GradedClass<C>::multiply(chern_character(A, dmax), chern_character(B, dmax), dmax);
    return chern_from_character(ch, rank, A.space, virt, dmax);
}

/// Top Chern class of E (x) L for a line bundle with class l.
template <class C>
GradedClass<C> top_chern_twist(const VBundle<C>& E, const GradedClass<C>& l)
{
    const auto& ring = E.ring();
    int r = E.rank;
    GradedClass<C> acc(ring);
    GradedClass<C> lp = ring->one();
    std::vector<GradedClass<C>> lpow{lp};
    for (int k = 1; k <= r; ++k) lpow.push_back(lpow.back() * l);
    for (int i = 0; i <= r; ++i) {
        auto ci = E.c(i);
        if (ci.is_zero()) continue;
        acc += GradedClass<C>::multiply(ci, lpow[r - i], r);
    }
    return acc;
}

enum class FunctorKind { Dual, Det, Sym, Wedge };

/// Schur functors through the Chern character and Adams operations.
template <class C>
VBundle<C> bundle_functor(FunctorKind kind, const VBundle<C>& B, int k = 0)
{
    switch (kind) {
    case FunctorKind::Dual:
        return dual(B);
    case FunctorKind::Det:
        return det(B);
    case FunctorKind::Sym:
    case FunctorKind::Wedge:
        break;
    }
    if (k < 0) throw RingError("negative functor degree");
    if (B.rank < 0) throw RingError("Schur functor of a negative-rank class");
    bool wedge = kind == FunctorKind::Wedge;
    const auto& ring = B.ring();
    if (wedge && k > B.rank && !B.is_virtual) {
        VBundle<C> z = trivial_bundle(B.space, 0);
        z.zero_flag = true;
        return z;
    }
    long rank = wedge ? detail::binomial(B.rank, k).get_num().get_si()
                      : detail::binomial(B.rank + k - 1, k).get_num().get_si();
    if (k == 0) return trivial_bundle(B.space, 1);
    int dmax = B.is_virtual ? ring->cut() : std::min<int>(rank, ring->cut());
    GradedClass<C> ch = chern_character(B, dmax);
    std::map<int, GradedClass<C>> psi;
    auto entry = detail::PlethysmTable::instance().get(wedge, k);
    TermMap<C> acc;
    for (const auto& [lam, coef] : entry) {
        GradedClass<C> prod = ring->one();
        for (int part : lam) {
            if (!psi.count(part)) psi.emplace(part, adams(ch, part));
            prod = GradedClass<C>::multiply(prod, psi.at(part), dmax);
        }
        C cc(coef);
        for (const auto& [m, v] : prod.terms()) fma_into(acc[m], v, cc);
    }
    auto chk = GradedClass<C>::from_map(ring, std::move(acc));
    return chern_from_character(chk, static_cast<int>(rank), B.space, B.is_virtual, dmax);
}

template <class C>
VBundle<C> sym(int k, const VBundle<C>& B)
{
    return bundle_functor(FunctorKind::Sym, B, k);
}
template <class C>
VBundle<C> wedge(int k, const VBundle<C>& B)
{
    return bundle_functor(FunctorKind::Wedge, B, k);
}

/// Todd class of a line bundle with first Chern class x, to degree dmax:
/// x/(1-e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...
inline std::vector<Rational> todd_series(int dmax)
{
    // Invert (1-e^{-x})/x = sum (-1)^n x^n/(n+1)!.
    std::vector<Rational> a(dmax + 1), t(dmax + 1);
    for (int n = 0; n <= dmax; ++n) a[n] = Rational((n % 2) ? -1 : 1) / detail::factorial(n + 1);
    t[0] = 1;
    for (int n = 1; n <= dmax; ++n) {
        Rational s = 0;
        for (int i = 1; i <= n; ++i) s += a[i] * t[n - i];
        t[n] = -s;
    }
    return t;
}

/// Derived pushforward along a P^1-bundle via Grothendieck-Riemann-Roch.
template <class C>
VBundle<C> grr_pushforward(const SpacePtr<C>& P, const VBundle<C>& B)
{
    if (P->kind != SpaceKind::P1) throw RingError("GRR pushforward needs a P^1-bundle");
    const auto& ring = P->ring;
    VBundle<C> Bp = pull_bundle(B, P);
    int dmax = ring->cut();
    GradedClass<C> ch = chern_character(Bp, dmax);
    auto tc = todd_series(dmax);
    GradedClass<C> x = P->gen(P->new_gens[0]).scaled(C(2));
    GradedClass<C> td(ring), xp = ring->one();
    for (int n = 0; n <= dmax; ++n) {
        td += xp.scaled(C(tc[n]));
        xp = xp * x;
    }
    GradedClass<C> down = push_step(*P, ch * td);
    int rank = 0;
    {
        C r0 = down.constant_term();
        Rational q = CoeffCast<Rational>::from(r0);
        if (q.get_den() != 1) throw RingError("non-integral Euler characteristic");
        rank = static_cast<int>(q.get_num().get_si());
    }
    return chern_from_character(down, rank, P->parent, true);
}

} // namespace hurwitz
