#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace hurwitz {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised for arithmetic failures (division by zero, poles).
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

/// Polynomial in the genus parameter g with rational coefficients,
/// stored in ascending powers. The zero polynomial has no coefficients.
class GenusPoly {
public:
    GenusPoly() = default;
    GenusPoly(long v) { if (v != 0) c_.emplace_back(v); }
    GenusPoly(const Rational& v) { if (sgn(v) != 0) c_.push_back(v); }
    explicit GenusPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static GenusPoly g() { return GenusPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Rational constant() const { return c_.empty() ? Rational(0) : c_[0]; }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }

    Rational eval(const Rational& x) const
    {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r *= x;
            r += *it;
        }
        return r;
    }

    GenusPoly operator-() const
    {
        GenusPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    GenusPoly& operator+=(const GenusPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    GenusPoly& operator-=(const GenusPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    GenusPoly& operator*=(const Rational& s)
    {
        if (sgn(s) == 0) { c_.clear(); return *this; }
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend GenusPoly operator+(GenusPoly a, const GenusPoly& b) { return a += b; }
    friend GenusPoly operator-(GenusPoly a, const GenusPoly& b) { return a -= b; }
    friend GenusPoly operator*(GenusPoly a, const Rational& s) { return a *= s; }
    friend GenusPoly operator*(const GenusPoly& a, const GenusPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.c_.size() == 1) return b * a.c_[0];
        if (b.c_.size() == 1) return a * b.c_[0];
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        Rational t;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
                r[i + j] += t;
            }
        return GenusPoly(std::move(r));
    }
    GenusPoly& operator*=(const GenusPoly& o) { return *this = *this * o; }

    friend bool operator==(const GenusPoly& a, const GenusPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const GenusPoly& a, const GenusPoly& b) { return !(a == b); }

    /// Euclidean division over Q.
    static std::pair<GenusPoly, GenusPoly> divmod(const GenusPoly& a, const GenusPoly& b)
    {
        if (b.is_zero()) throw ArithmeticError("division by zero in ℚ(g)");
        if (a.degree() < b.degree()) return {GenusPoly(), a};
        std::vector<Rational> r = a.c_;
        std::vector<Rational> q(a.c_.size() - b.c_.size() + 1);
        const Rational& lb = b.lead();
        Rational t;
        for (int i = a.degree(); i >= b.degree(); --i) {
            if (sgn(r[i]) == 0) continue;
            Rational f = r[i] / lb;
            int shift = i - b.degree();
            q[shift] = f;
            for (int j = 0; j <= b.degree(); ++j) {
                mpq_mul(t.get_mpq_t(), f.get_mpq_t(), b.c_[j].get_mpq_t());
                r[shift + j] -= t;
            }
        }
        r.resize(b.c_.size() - 1);
        return {GenusPoly(std::move(q)), GenusPoly(std::move(r))};
    }

    GenusPoly monic() const
    {
        if (is_zero()) return *this;
        return *this * (Rational(1) / lead());
    }

    /// Monic gcd over Q.
    static GenusPoly gcd(GenusPoly a, GenusPoly b)
    {
        while (!b.is_zero()) {
            GenusPoly r = divmod(a, b).second;
            a = std::move(b);
            b = r.primitive_part();
        }
        return a.monic();
    }

    /// Positive rational s with this = s * (primitive integer polynomial with positive lead).
    Rational content() const
    {
        if (is_zero()) return 1;
        Integer num_gcd = 0, den_lcm = 1;
        for (const auto& v : c_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
        }
        Rational s(num_gcd, den_lcm);
        s.canonicalize();
        if (sgn(lead()) < 0) s = -s;
        return s;
    }
    GenusPoly primitive_part() const
    {
        if (is_zero()) return *this;
        return *this * (Rational(1) / content());
    }

    /// Integer roots r >= gmin, found exactly.
    std::set<long> integer_roots(long gmin) const;

    std::string to_string(const std::string& var = "g") const;
    nlohmann::json to_json() const
    {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& v : c_) a.push_back(rational_str(v));
        return a;
    }
    static GenusPoly from_json(const nlohmann::json& j)
    {
        std::vector<Rational> v;
        for (const auto& e : j) v.push_back(parse_rational(e.get<std::string>()));
        return GenusPoly(std::move(v));
    }

private:
    void trim()
    {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::string GenusPoly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& v = c_[i];
        if (sgn(v) == 0) continue;
        Rational a = abs(v);
        bool first = out.empty();
        if (sgn(v) < 0) out += first ? "-" : "-";
        else if (!first) out += "+";
        bool unit = (a == 1) && i > 0;
        if (!unit) out += rational_str(a);
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

inline std::set<long> GenusPoly::integer_roots(long gmin) const
{
    if (is_zero()) throw ArithmeticError("root set is everything: zero polynomial");
    std::set<long> roots;
    GenusPoly p = primitive_part();
    std::size_t low = 0;
    while (sgn(p.c_[low]) == 0) ++low;
    if (low > 0 && gmin <= 0) roots.insert(0);
    std::vector<Integer> z;
    for (std::size_t i = low; i < p.c_.size(); ++i) z.push_back(p.c_[i].get_num());
    if (z.size() == 1) return roots;
    // Cauchy bound on the magnitude of any root.
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        Rational r(abs(z[i]), abs(z.back()));
        if (r > bound) bound = r;
    }
    Integer b = 1 + bound.get_num() / bound.get_den();
    auto is_root = [&](const Integer& r) {
        Integer acc = 0;
        for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * r + *it;
        return acc == 0;
    };
    const Integer& c0 = z.front();
    Integer lo = std::max<Integer>(-b, Integer(gmin));
    if (b - lo > 2000000) {
        // Large bound: isolate real roots with a Sturm sequence and bisection.
        std::vector<GenusPoly> sturm{p};
        std::vector<Rational> dp;
        for (std::size_t i = 1; i < p.c_.size(); ++i) dp.push_back(p.c_[i] * Rational(static_cast<long>(i)));
        sturm.push_back(GenusPoly(std::move(dp)));
        while (!sturm.back().is_zero() && sturm.back().degree() > 0) {
            GenusPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
            if (r.is_zero()) break;
            sturm.push_back((-r).primitive_part());
        }
        auto changes = [&](const Integer& x) {
            int n = 0, last = 0;
            for (const auto& q : sturm) {
                int sg = sgn(q.eval(Rational(x)));
                if (sg == 0) continue;
                if (last != 0 && sg != last) ++n;
                last = sg;
            }
            return n;
        };
        auto rec = [&](auto&& self, const Integer& a, const Integer& c) -> void {
            // real roots in (a, c]
            if (changes(a) - changes(c) <= 0) return;
            if (c - a <= 8) {
                for (Integer r = a + 1; r <= c; ++r) {
                    if (r == 0 || !is_root(r)) continue;
                    if (!r.fits_slong_p()) throw ArithmeticError("integer root out of range");
                    roots.insert(r.get_si());
                }
                return;
            }
            Integer m = (a + c) / 2;
            self(self, a, m);
            self(self, m, c);
        };
        rec(rec, lo - 1, b);
        return roots;
    }
    for (Integer r = lo; r <= b; ++r) {
        if (r == 0) continue;
        if (c0 % r != 0) continue;
        if (is_root(r)) roots.insert(r.get_si());
    }
    return roots;
}

/// Element of Q(g) in canonical form: gcd(num, den) = 1 and den is a
/// primitive integer polynomial with positive leading coefficient.
class GenusRational {
public:
    GenusRational() : den_(1) {}
    GenusRational(long v) : num_(v), den_(1) {}
    GenusRational(const Rational& v) : num_(v), den_(1) {}
    GenusRational(const GenusPoly& p) : num_(p), den_(1) {}

    static GenusRational normalize(GenusPoly num, GenusPoly den)
    {
        if (den.is_zero()) throw ArithmeticError("division by zero in ℚ(g)");
        GenusRational r;
        if (num.is_zero()) return r;
        if (den.is_constant()) {
            r.num_ = num * (Rational(1) / den.constant());
            return r;
        }
        GenusPoly g = GenusPoly::gcd(num, den);
        if (g.degree() > 0) {
            num = GenusPoly::divmod(num, g).first;
            den = GenusPoly::divmod(den, g).first;
        }
        Rational s = den.content();
        r.num_ = num * (Rational(1) / s);
        r.den_ = den * (Rational(1) / s);
        return r;
    }

    static GenusRational g() { return GenusRational(GenusPoly::g()); }

    const GenusPoly& num() const { return num_; }
    const GenusPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    Rational constant() const { return num_.constant(); }

    Rational eval(const Rational& g0) const
    {
        Rational d = den_.eval(g0);
        if (sgn(d) == 0) throw ArithmeticError("pole at g=" + rational_str(g0));
        return num_.eval(g0) / d;
    }

    GenusRational operator-() const
    {
        GenusRational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend GenusRational operator+(const GenusRational& a, const GenusRational& b)
    {
        if (a.den_.is_one() && b.den_.is_one()) {
            GenusRational r;
            r.num_ = a.num_ + b.num_;
            return r;
        }
        if (a.den_ == b.den_) return normalize(a.num_ + b.num_, a.den_);
        return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend GenusRational operator-(const GenusRational& a, const GenusRational& b) { return a + (-b); }
    friend GenusRational operator*(const GenusRational& a, const GenusRational& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one()) {
            GenusRational r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        if (a.is_constant()) return b.scaled(a.constant());
        if (b.is_constant()) return a.scaled(b.constant());
        return normalize(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend GenusRational operator/(const GenusRational& a, const GenusRational& b)
    {
        if (b.is_zero()) throw ArithmeticError("division by zero in ℚ(g)");
        if (b.is_constant()) return a.scaled(Rational(1) / b.constant());
        return normalize(a.num_ * b.den_, a.den_ * b.num_);
    }
    GenusRational& operator+=(const GenusRational& o) { return *this = *this + o; }
    GenusRational& operator-=(const GenusRational& o) { return *this = *this - o; }
    GenusRational& operator*=(const GenusRational& o) { return *this = *this * o; }
    GenusRational& operator/=(const GenusRational& o) { return *this = *this / o; }

    GenusRational scaled(const Rational& s) const
    {
        GenusRational r = *this;
        r.num_ *= s;
        return r;
    }

    friend bool operator==(const GenusRational& a, const GenusRational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const GenusRational& a, const GenusRational& b) { return !(a == b); }

    std::string to_string() const
    {
        if (den_.is_one()) return num_.to_string();
        auto wrap = [](const GenusPoly& p) {
            std::string s = p.to_string();
            int nterms = 0;
            for (const auto& c : p.coeffs()) nterms += sgn(c) != 0;
            return nterms > 1 ? "(" + s + ")" : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }

    nlohmann::json to_json() const { return {{"num", num_.to_json()}, {"den", den_.to_json()}}; }
    static GenusRational from_json(const nlohmann::json& j)
    {
        return normalize(GenusPoly::from_json(j.at("num")), GenusPoly::from_json(j.at("den")));
    }

private:
    GenusPoly num_, den_;
};

inline GenusRational gr_normalize(const GenusPoly& num, const GenusPoly& den)
{
    return GenusRational::normalize(num, den);
}

inline Rational gr_eval(const GenusRational& x, long g0) { return x.eval(Rational(g0)); }

inline std::set<long> poly_integer_roots(const GenusPoly& p, long gmin) { return p.integer_roots(gmin); }

// Coefficient-type hooks shared by the templated algebra.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GenusRational& q) { return q.is_zero(); }
inline std::string coeff_str(const Rational& q) { return rational_str(q); }
inline std::string coeff_str(const GenusRational& q) { return q.to_string(); }
inline nlohmann::json coeff_json(const Rational& q) { return GenusRational(q).to_json(); }
inline nlohmann::json coeff_json(const GenusRational& q) { return q.to_json(); }

/// acc += x * y without temporaries where the type allows it.
inline void fma_into(Rational& acc, const Rational& x, const Rational& y)
{
    thread_local Rational t;
    mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
    acc += t;
}
inline void fma_into(GenusRational& acc, const GenusRational& x, const GenusRational& y) { acc += x * y; }

template <class To>
struct CoeffCast;
template <>
struct CoeffCast<Rational> {
    static Rational from(const Rational& q) { return q; }
    static Rational from(const GenusRational& q)
    {
        if (!q.is_constant()) throw ArithmeticError("coefficient depends on g: " + q.to_string());
        return q.constant();
    }
};
template <>
struct CoeffCast<GenusRational> {
    static GenusRational from(const Rational& q) { return GenusRational(q); }
    static GenusRational from(const GenusRational& q) { return q; }
};

/// Specialize g to a rational value.
inline GenusRational specialize(const GenusRational& q, const Rational& g0) { return GenusRational(q.eval(g0)); }
inline Rational specialize(const Rational& q, const Rational&) { return q; }

} // namespace hurwitz
