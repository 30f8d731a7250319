#pragma once

#include "coeffs.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hurwitz {

inline constexpr int kMaxGens = 32;
inline constexpr int kMaxLevels = 12;

/// Raised when classes from unrelated rings meet, or a ring is malformed.
class RingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense exponent vector; generator i has exponent e[i].
struct Monomial {
    alignas(8) std::array<std::uint8_t, kMaxGens> e{};

    Monomial& operator+=(const Monomial& o)
    {
        for (int i = 0; i < kMaxGens; ++i) e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
        return *this;
    }
    friend Monomial operator+(Monomial a, const Monomial& b) { return a += b; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    bool is_one() const
    {
        for (auto v : e)
            if (v) return false;
        return true;
    }
    bool divides(const Monomial& o) const
    {
        for (int i = 0; i < kMaxGens; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept
    {
        std::uint64_t w[kMaxGens / 8];
        std::memcpy(w, m.e.data(), sizeof(w));
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : w) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

struct Generator {
    std::string name;
    int degree;
};

template <class C>
class GradedClass;
template <class C>
class Ring;
template <class C>
using RingPtr = std::shared_ptr<const Ring<C>>;

template <class C>
using Term = std::pair<Monomial, C>;
template <class C>
using TermMap = absl::flat_hash_map<Monomial, C, MonomialHash>;

/// Graded polynomial ring on named generators, truncated above a cut, with
/// pure-power rewrite rules x^k -> rhs. Rings built as tower extensions also
/// carry the cuts of their ancestors ("levels"): a monomial survives only if
/// its restriction to each ancestor's generators respects that ancestor's cut.
template <class C>
class Ring : public std::enable_shared_from_this<Ring<C>> {
public:
    struct Rule {
        int var;
        int power;
        std::vector<Term<C>> rhs;
    };
    struct Level {
        int ngens;
        int cut;
    };

    static RingPtr<C> make(const std::vector<Generator>& gens, int cut)
    {
        auto r = std::shared_ptr<Ring>(new Ring());
        r->init_gens({}, gens, cut, {});
        return r;
    }

    /// A child ring with extra generators appended; no new rules yet.
    static RingPtr<C> extend(const RingPtr<C>& parent, const std::vector<Generator>& gens, int cut)
    {
        if (cut < parent->cut_) throw RingError("child cut below parent cut");
        auto r = std::shared_ptr<Ring>(new Ring());
        r->init_gens(parent->gens_, gens, cut, parent->levels_);
        r->rules_ = parent->rules_;
        r->parent_ = parent;
        r->finish_rules();
        return r;
    }

    /// Copy of `draft` with additional rules. Rule right-hand sides are
    /// classes built in `draft`.
    static RingPtr<C> with_rules(const RingPtr<C>& draft,
                                 const std::vector<std::tuple<std::string, int, GradedClass<C>>>& rules);

    int ngens() const { return static_cast<int>(gens_.size()); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(int i) const { return gens_.at(i); }
    int cut() const { return cut_; }
    const std::vector<Level>& levels() const { return levels_; }
    const std::vector<Rule>& rules() const { return rules_; }
    RingPtr<C> parent() const { return parent_; }

    int index(const std::string& name) const
    {
        auto it = index_.find(name);
        if (it == index_.end()) throw RingError("unknown generator " + name);
        return it->second;
    }
    bool has(const std::string& name) const { return index_.count(name) > 0; }

    int degree(const Monomial& m) const
    {
        int d = 0;
        for (int i = 0; i < ngens(); ++i) d += m.e[i] * degs_[i];
        return d;
    }

    void level_degrees(const Monomial& m, int* out) const
    {
        int d = 0, li = 0;
        for (int i = 0; i < ngens(); ++i) {
            while (li < static_cast<int>(levels_.size()) && levels_[li].ngens == i) out[li++] = d;
            d += m.e[i] * degs_[i];
        }
        while (li < static_cast<int>(levels_.size())) out[li++] = d;
    }

    bool keeps(const Monomial& m) const
    {
        int ld[kMaxLevels];
        level_degrees(m, ld);
        for (std::size_t i = 0; i < levels_.size(); ++i)
            if (ld[i] > levels_[i].cut) return false;
        return true;
    }

    bool is_normal(const Monomial& m) const
    {
        for (const auto& r : rules_)
            if (m.e[r.var] >= r.power) return false;
        return true;
    }

    /// True if `other` is this ring or one of its ancestors.
    bool descends_from(const Ring* other) const
    {
        for (const Ring* r = this; r; r = r->parent_.get())
            if (r == other) return true;
        return false;
    }
    /// Same generator layout, rules and cuts (a rebuilt twin counts as equal).
    bool same_shape(const Ring& o) const
    {
        if (ngens() != o.ngens() || cut_ != o.cut_) return false;
        for (int i = 0; i < ngens(); ++i)
            if (gens_[i].name != o.gens_[i].name || degs_[i] != o.degs_[i]) return false;
        return true;
    }

    GradedClass<C> gen(const std::string& name) const;
    GradedClass<C> one() const;

    /// Apply every rule until all monomials are normal, dropping truncated terms.
    void reduce(TermMap<C>& acc) const
    {
        for (int ri : order_) {
            const Rule& rule = rules_[ri];
            std::vector<Term<C>> todo;
            for (auto it = acc.begin(); it != acc.end();) {
                if (it->first.e[rule.var] >= rule.power) {
                    if (!is_zero(it->second)) todo.emplace_back(it->first, std::move(it->second));
                    acc.erase(it++);
                } else {
                    ++it;
                }
            }
            for (auto& [m, c] : todo) {
                int e = m.e[rule.var];
                Monomial rest = m;
                rest.e[rule.var] = 0;
                auto nf = power_nf(ri, e);
                for (const auto& [nm, nc] : *nf) {
                    Monomial mm = rest + nm;
                    if (!keeps(mm)) continue;
                    fma_into(acc[mm], c, nc);
                }
            }
        }
    }

private:
    Ring() = default;

    void init_gens(std::vector<Generator> base, const std::vector<Generator>& extra, int cut,
                   std::vector<Level> levels)
    {
        if (cut < 1) throw RingError("cut must be at least 1");
        if (cut > 200) throw RingError("cut too large");
        gens_ = std::move(base);
        for (const auto& g : extra) gens_.push_back(g);
        if (static_cast<int>(gens_.size()) > kMaxGens) throw RingError("too many generators");
        for (int i = 0; i < ngens(); ++i) {
            if (gens_[i].degree < 1) throw RingError("generator degree must be positive: " + gens_[i].name);
            if (!index_.emplace(gens_[i].name, i).second) throw RingError("duplicate generator " + gens_[i].name);
            degs_.push_back(gens_[i].degree);
        }
        cut_ = cut;
        levels_ = std::move(levels);
        levels_.push_back({ngens(), cut});
        if (static_cast<int>(levels_.size()) > kMaxLevels) throw RingError("tower too deep");
    }

    void finish_rules()
    {
        // Process a rule before any rule whose variable occurs in its right side.
        int n = static_cast<int>(rules_.size());
        std::vector<std::vector<int>> after(n);
        std::vector<int> indeg(n, 0);
        std::vector<int> rule_of(kMaxGens, -1);
        for (int i = 0; i < n; ++i) {
            if (rule_of[rules_[i].var] >= 0) throw RingError("two rules for one generator");
            rule_of[rules_[i].var] = i;
        }
        for (int i = 0; i < n; ++i) {
            std::vector<bool> seen(n, false);
            for (const auto& [m, c] : rules_[i].rhs)
                for (int v = 0; v < kMaxGens; ++v)
                    if (m.e[v] && rule_of[v] >= 0 && rule_of[v] != i && !seen[rule_of[v]]) {
                        seen[rule_of[v]] = true;
                        after[i].push_back(rule_of[v]);
                        ++indeg[rule_of[v]];
                    }
        }
        order_.clear();
        std::vector<int> ready;
        for (int i = n - 1; i >= 0; --i)
            if (indeg[i] == 0) ready.push_back(i);
        while (!ready.empty()) {
            int i = ready.back();
            ready.pop_back();
            order_.push_back(i);
            for (int j : after[i])
                if (--indeg[j] == 0) ready.push_back(j);
        }
        if (static_cast<int>(order_.size()) != n) throw RingError("rewrite rules are cyclic");
    }

    std::shared_ptr<const std::vector<Term<C>>> power_nf(int ri, int e) const
    {
        auto key = std::make_pair(ri, e);
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = nf_cache_.find(key);
            if (it != nf_cache_.end()) return it->second;
        }
        const Rule& rule = rules_[ri];
        std::vector<Term<C>> out;
        if (e == rule.power) {
            for (const auto& t : rule.rhs)
                if (keeps(t.first)) out.push_back(t);
        } else {
            auto prev = power_nf(ri, e - 1);
            TermMap<C> acc;
            for (const auto& [m, c] : *prev) {
                Monomial mm = m;
                mm.e[rule.var] += 1;
                if (!keeps(mm)) continue;
                fma_into(acc[mm], c, C(1));
            }
            reduce(acc);
            for (auto& [m, c] : acc)
                if (!is_zero(c)) out.emplace_back(m, std::move(c));
        }
        auto ptr = std::make_shared<const std::vector<Term<C>>>(std::move(out));
        std::lock_guard<std::mutex> lock(cache_mutex_);
        return nf_cache_.emplace(key, ptr).first->second;
    }

    std::vector<Generator> gens_;
    std::vector<int> degs_;
    std::unordered_map<std::string, int> index_;
    int cut_ = 0;
    std::vector<Level> levels_;
    std::vector<Rule> rules_;
    std::vector<int> order_;
    RingPtr<C> parent_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const std::vector<Term<C>>>> nf_cache_;
};

/// Truncated graded polynomial in normal form. Terms are kept sorted by
/// degree, then lexicographically by exponent vector.
template <class C>
class GradedClass {
public:
    GradedClass() = default;
    explicit GradedClass(RingPtr<C> ring) : ring_(std::move(ring)) {}
    GradedClass(RingPtr<C> ring, const C& scalar) : ring_(std::move(ring))
    {
        if (!hurwitz::is_zero(scalar)) terms_.emplace_back(Monomial{}, scalar);
    }

    /// Build from accumulated terms: reduce, truncate, drop zeros, sort.
    static GradedClass from_map(RingPtr<C> ring, TermMap<C>&& acc)
    {
        ring->reduce(acc);
        GradedClass r(std::move(ring));
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!hurwitz::is_zero(c)) r.terms_.emplace_back(m, std::move(c));
        r.sort_terms();
        return r;
    }
    static GradedClass monomial(RingPtr<C> ring, const Monomial& m, const C& c = C(1))
    {
        TermMap<C> acc;
        if (ring->keeps(m)) acc[m] = c;
        return from_map(std::move(ring), std::move(acc));
    }

    const RingPtr<C>& ring() const { return ring_; }
    const std::vector<Term<C>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    int max_degree() const
    {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, ring_->degree(t.first));
        return d;
    }
    int min_degree() const
    {
        int d = 1 << 30;
        for (const auto& t : terms_) d = std::min(d, ring_->degree(t.first));
        return terms_.empty() ? -1 : d;
    }
    bool is_homogeneous() const { return terms_.empty() || min_degree() == max_degree(); }

    C coeff(const Monomial& m) const
    {
        for (const auto& t : terms_)
            if (t.first == m) return t.second;
        return C(0);
    }
    C constant_term() const { return coeff(Monomial{}); }

    GradedClass graded_part(int d) const
    {
        if (d > ring_->cut()) throw RingError("degree " + std::to_string(d) + " exceeds cut");
        GradedClass r(ring_);
        for (const auto& t : terms_)
            if (ring_->degree(t.first) == d) r.terms_.push_back(t);
        return r;
    }
    GradedClass truncated(int dmax) const
    {
        GradedClass r(ring_);
        for (const auto& t : terms_)
            if (ring_->degree(t.first) <= dmax) r.terms_.push_back(t);
        return r;
    }

    GradedClass operator-() const
    {
        GradedClass r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    GradedClass scaled(const C& s) const
    {
        GradedClass r(ring_);
        if (hurwitz::is_zero(s)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            C v = t.second * s;
            if (!hurwitz::is_zero(v)) r.terms_.emplace_back(t.first, std::move(v));
        }
        return r;
    }

    friend GradedClass operator+(const GradedClass& a, const GradedClass& b) { return combine(a, b, false); }
    friend GradedClass operator-(const GradedClass& a, const GradedClass& b) { return combine(a, b, true); }
    friend GradedClass operator*(const GradedClass& a, const C& s) { return a.scaled(s); }
    friend GradedClass operator*(const C& s, const GradedClass& a) { return a.scaled(s); }
    friend GradedClass operator+(const GradedClass& a, const C& s) { return a + GradedClass(a.ring_, s); }
    friend GradedClass operator-(const GradedClass& a, const C& s) { return a - GradedClass(a.ring_, s); }
    GradedClass& operator+=(const GradedClass& o) { return *this = *this + o; }
    GradedClass& operator-=(const GradedClass& o) { return *this = *this - o; }
    GradedClass& operator*=(const GradedClass& o) { return *this = *this * o; }

    friend GradedClass operator*(const GradedClass& a, const GradedClass& b)
    {
        if (a.ring_.get() != b.ring_.get()) {
            auto r = common_ring(a, b);
            return a.pulled(r) * b.pulled(r);
        }
        return multiply(a, b, a.ring_->cut());
    }

    /// Product keeping only degrees <= dmax.
    static GradedClass multiply(const GradedClass& a, const GradedClass& b, int dmax)
    {
        const auto& ring = a.ring_;
        if (a.terms_.empty() || b.terms_.empty()) return GradedClass(ring);
        if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a.scaled(b.terms_[0].second).truncated(dmax);
        if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b.scaled(a.terms_[0].second).truncated(dmax);
        const auto& lv = ring->levels();
        const int nl = static_cast<int>(lv.size());
        std::vector<std::array<int, kMaxLevels>> la(a.terms_.size()), lb(b.terms_.size());
        for (std::size_t i = 0; i < a.terms_.size(); ++i) ring->level_degrees(a.terms_[i].first, la[i].data());
        for (std::size_t j = 0; j < b.terms_.size(); ++j) ring->level_degrees(b.terms_[j].first, lb[j].data());
        std::array<int, kMaxLevels> caps{};
        for (int l = 0; l < nl; ++l) caps[l] = lv[l].cut;
        caps[nl - 1] = std::min(caps[nl - 1], dmax);
        TermMap<C> acc;
        acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1 << 20));
        for (std::size_t i = 0; i < a.terms_.size(); ++i) {
            const auto& ai = la[i];
            for (std::size_t j = 0; j < b.terms_.size(); ++j) {
                const auto& bj = lb[j];
                bool ok = true;
                for (int l = 0; l < nl; ++l)
                    if (ai[l] + bj[l] > caps[l]) { ok = false; break; }
                if (!ok) continue;
                fma_into(acc[a.terms_[i].first + b.terms_[j].first], a.terms_[i].second, b.terms_[j].second);
            }
        }
        return from_map(ring, std::move(acc));
    }

    GradedClass pow(int n) const
    {
        if (n < 0) throw RingError("negative power");
        GradedClass r(ring_, C(1)), base = *this;
        while (n) {
            if (n & 1) r = r * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return r;
    }

    /// The same class viewed in a descendant ring.
    GradedClass pulled(const RingPtr<C>& target) const
    {
        if (target.get() == ring_.get()) return *this;
        if (!target->descends_from(ring_.get())) throw RingError("class does not live on an ancestor of the target ring");
        GradedClass r(target);
        r.terms_ = terms_;
        return r;
    }

    /// Reinterpret in an ancestor ring; every term must avoid the dropped generators.
    GradedClass restricted(const RingPtr<C>& ancestor) const
    {
        if (!ring_->descends_from(ancestor.get())) throw RingError("target is not an ancestor");
        for (const auto& t : terms_)
            for (int i = ancestor->ngens(); i < ring_->ngens(); ++i)
                if (t.first.e[i]) throw RingError("class involves generators outside the ancestor ring");
        GradedClass r(ancestor);
        for (const auto& t : terms_)
            if (ancestor->keeps(t.first)) r.terms_.push_back(t);
        return r;
    }

    template <class F>
    GradedClass map_coeffs(F&& f) const
    {
        GradedClass r(ring_);
        for (const auto& t : terms_) {
            C v = f(t.second);
            if (!hurwitz::is_zero(v)) r.terms_.emplace_back(t.first, std::move(v));
        }
        return r;
    }

    friend bool operator==(const GradedClass& a, const GradedClass& b)
    {
        if (a.ring_.get() != b.ring_.get()) {
            if (a.is_zero() && b.is_zero()) return true;
            auto r = common_ring(a, b);
            return a.pulled(r).terms_ == b.pulled(r).terms_;
        }
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

    std::string monomial_str(const Monomial& m) const
    {
        std::string s;
        for (int i = 0; i < ring_->ngens(); ++i) {
            if (!m.e[i]) continue;
            if (!s.empty()) s += "*";
            s += ring_->generator(i).name;
            if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
        }
        return s.empty() ? "1" : s;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('/') != std::string::npos;
            std::string body;
            if (m.is_one()) {
                body = neg ? cs.substr(1) : cs;
                if (neg && compound) { body = "(" + cs + ")"; neg = false; }
            } else if (cs == "1" || cs == "-1") {
                body = monomial_str(m);
            } else if (compound) {
                body = "(" + cs + ")*" + monomial_str(m);
                neg = false;
            } else {
                body = (neg ? cs.substr(1) : cs) + "*" + monomial_str(m);
            }
            if (out.empty()) out = neg ? "-" + body : body;
            else out += (neg ? " - " : " + ") + body;
        }
        return out;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [m, c] : terms_) {
            nlohmann::json mono = nlohmann::json::object();
            for (int i = 0; i < ring_->ngens(); ++i)
                if (m.e[i]) mono[ring_->generator(i).name] = m.e[i];
            arr.push_back({{"monomial", mono}, {"coeff", coeff_json(c)}});
        }
        return {{"terms", arr}};
    }

    static GradedClass from_json(const RingPtr<C>& ring, const nlohmann::json& j)
    {
        TermMap<C> acc;
        for (const auto& t : j.at("terms")) {
            Monomial m;
            for (const auto& [name, e] : t.at("monomial").items()) m.e[ring->index(name)] = e.template get<int>();
            GenusRational q = GenusRational::from_json(t.at("coeff"));
            if (ring->keeps(m)) acc[m] += CoeffCast<C>::from(q);
        }
        return from_map(ring, std::move(acc));
    }

    static RingPtr<C> common_ring(const GradedClass& a, const GradedClass& b)
    {
        if (!a.ring_) return b.ring_;
        if (!b.ring_) return a.ring_;
        if (a.ring_->descends_from(b.ring_.get())) return a.ring_;
        if (b.ring_->descends_from(a.ring_.get())) return b.ring_;
        throw RingError("ring mismatch");
    }

    void sort_terms()
    {
        const Ring<C>* r = ring_.get();
        std::vector<std::pair<int, std::size_t>> keys(terms_.size());
        for (std::size_t i = 0; i < terms_.size(); ++i) keys[i] = {r->degree(terms_[i].first), i};
        std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return terms_[x.second].first.e > terms_[y.second].first.e;
        });
        std::vector<Term<C>> sorted;
        sorted.reserve(terms_.size());
        for (const auto& k : keys) sorted.push_back(std::move(terms_[k.second]));
        terms_ = std::move(sorted);
    }

private:
    static GradedClass combine(const GradedClass& a, const GradedClass& b, bool subtract)
    {
        if (a.ring_.get() != b.ring_.get()) {
            auto r = common_ring(a, b);
            return combine(a.pulled(r), b.pulled(r), subtract);
        }
        TermMap<C> acc;
        acc.reserve(a.terms_.size() + b.terms_.size());
        for (const auto& [m, c] : a.terms_) acc[m] = c;
        for (const auto& [m, c] : b.terms_) {
            if (subtract) acc[m] -= c;
            else acc[m] += c;
        }
        GradedClass r(a.ring_ ? a.ring_ : b.ring_);
        for (auto& [m, c] : acc)
            if (!hurwitz::is_zero(c)) r.terms_.emplace_back(m, std::move(c));
        r.sort_terms();
        return r;
    }

    RingPtr<C> ring_;
    std::vector<Term<C>> terms_;
};

template <class C>
GradedClass<C> Ring<C>::gen(const std::string& name) const
{
    Monomial m;
    m.e[index(name)] = 1;
    return GradedClass<C>::monomial(this->shared_from_this(), m);
}

template <class C>
GradedClass<C> Ring<C>::one() const
{
    return GradedClass<C>(this->shared_from_this(), C(1));
}

template <class C>
RingPtr<C> Ring<C>::with_rules(const RingPtr<C>& draft,
                               const std::vector<std::tuple<std::string, int, GradedClass<C>>>& rules)
{
    auto r = std::shared_ptr<Ring>(new Ring());
    r->gens_ = draft->gens_;
    r->degs_ = draft->degs_;
    r->index_ = draft->index_;
    r->cut_ = draft->cut_;
    r->levels_ = draft->levels_;
    r->rules_ = draft->rules_;
    r->parent_ = draft->parent_;
    for (const auto& [name, power, rhs] : rules) {
        int v = draft->index(name);
        if (power < 1) throw RingError("rule power must be positive");
        int d = power * draft->degs_[v];
        Rule rule{v, power, {}};
        for (const auto& [m, c] : rhs.terms()) {
            if (draft->degree(m) != d) throw RingError("inhomogeneous rule for " + name);
            if (m.e[v] >= power) throw RingError("rule for " + name + " is not reduced");
            rule.rhs.emplace_back(m, c);
        }
        r->rules_.push_back(std::move(rule));
    }
    for (const auto& rule : r->rules_)
        for (const auto& [m, c] : rule.rhs)
            for (const auto& other : r->rules_)
                if (m.e[other.var] >= other.power)
                    throw RingError("rule right side for " + r->gens_[rule.var].name + " is not reduced");
    r->finish_rules();
    return r;
}

/// A free graded ring (no rules) on the given generators.
template <class C = GenusRational>
RingPtr<C> ring_new(const std::vector<Generator>& gens, int cut)
{
    return Ring<C>::make(gens, cut);
}

template <class C>
GradedClass<C> class_mul(const GradedClass<C>& a, const GradedClass<C>& b)
{
    if (a.ring().get() != b.ring().get()) throw RingError("ring mismatch");
    return a * b;
}

template <class C>
GradedClass<C> graded_part(const GradedClass<C>& a, int d)
{
    return a.graded_part(d);
}

/// Ring homomorphism defined on generators. Generators without an explicit
/// image map to the same-named generator of the target ring.
template <class CT, class CS>
GradedClass<CT> class_substitute(const GradedClass<CS>& a, const std::map<std::string, GradedClass<CT>>& images,
                                 const RingPtr<CT>& target)
{
    const auto& src = a.ring();
    const int n = src->ngens();
    std::vector<GradedClass<CT>> img(n);
    std::vector<bool> used(n, false);
    for (const auto& [m, c] : a.terms())
        for (int i = 0; i < n; ++i)
            if (m.e[i]) used[i] = true;
    for (int i = 0; i < n; ++i) {
        const auto& g = src->generator(i);
        auto it = images.find(g.name);
        if (it != images.end()) {
            const auto& v = it->second;
            if (!v.is_zero() && (!v.is_homogeneous() || v.min_degree() != g.degree))
                throw RingError("substitution for " + g.name + " does not preserve degree");
            img[i] = v.pulled(target);
        } else if (used[i]) {
            if (!target->has(g.name)) throw RingError("no image for generator " + g.name);
            if (target->generator(target->index(g.name)).degree != g.degree)
                throw RingError("substitution for " + g.name + " does not preserve degree");
            img[i] = target->gen(g.name);
        }
    }
    // Horner evaluation, grouping terms by exponents from the last generator down.
    std::vector<const Term<CS>*> ts;
    for (const auto& t : a.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [n](const Term<CS>* x, const Term<CS>* y) {
        for (int i = n - 1; i >= 0; --i)
            if (x->first.e[i] != y->first.e[i]) return x->first.e[i] < y->first.e[i];
        return false;
    });
    std::vector<std::vector<GradedClass<CT>>> powers(n);
    auto power = [&](int v, int e) -> const GradedClass<CT>& {
        auto& p = powers[v];
        if (p.empty()) p.push_back(target->one());
        while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * img[v]);
        return p[e];
    };
    auto rec = [&](auto&& self, std::size_t lo, std::size_t hi, int var) -> GradedClass<CT> {
        if (var < 0) return GradedClass<CT>(target, CoeffCast<CT>::from(ts[lo]->second));
        GradedClass<CT> acc(target);
        std::size_t i = lo;
        while (i < hi) {
            int e = ts[i]->first.e[var];
            std::size_t j = i;
            while (j < hi && ts[j]->first.e[var] == e) ++j;
            GradedClass<CT> sub = self(self, i, j, var - 1);
            acc += e == 0 ? sub : sub * power(var, e);
            i = j;
        }
        return acc;
    };
    if (ts.empty()) return GradedClass<CT>(target);
    return rec(rec, 0, ts.size(), n - 1);
}

/// Same-ring substitution convenience.
template <class C>
GradedClass<C> class_substitute(const GradedClass<C>& a, const std::map<std::string, GradedClass<C>>& images)
{
    return class_substitute<C, C>(a, images, a.ring());
}

} // namespace hurwitz
