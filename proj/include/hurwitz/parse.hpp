#pragma once

#include "gring.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace hurwitz {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

template <class C>
C genus_value(const std::optional<long>& fixed);
template <>
inline GenusRational genus_value<GenusRational>(const std::optional<long>& fixed)
{
    return fixed ? GenusRational(*fixed) : GenusRational::g();
}
template <>
inline Rational genus_value<Rational>(const std::optional<long>& fixed)
{
    if (!fixed) throw ParseError("g needs a fixed genus for rational coefficients");
    return Rational(*fixed);
}

/// Recursive-descent parser for polynomial expressions in ring generators and g.
/// Juxtaposition is multiplication; names may carry primes (a2' or a2′).
template <class C>
class ExprParser {
public:
    ExprParser(std::string text, RingPtr<C> ring, std::optional<long> genus)
        : s_(normalize(std::move(text))), ring_(std::move(ring)), genus_(genus)
    {
    }

    GradedClass<C> parse()
    {
        auto v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    static std::string normalize(std::string t)
    {
        std::string out;
        for (std::size_t i = 0; i < t.size(); ++i) {
            // U+2032 prime and U+2212 minus
            if (t.compare(i, 3, "\xE2\x80\xB2") == 0) { out += '\''; i += 2; continue; }
            if (t.compare(i, 3, "\xE2\x88\x92") == 0) { out += '-'; i += 2; continue; }
            out += t[i];
        }
        return out;
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" + s_ + "\"");
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor()
    {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    GradedClass<C> expr()
    {
        GradedClass<C> acc = term();
        for (;;) {
            if (peek('+')) { ++pos_; acc = acc + term(); }
            else if (peek('-')) { ++pos_; acc = acc - term(); }
            else return acc;
        }
    }
    GradedClass<C> term()
    {
        GradedClass<C> acc = unary();
        for (;;) {
            if (peek('*')) { ++pos_; acc = acc * unary(); }
            else if (peek('/')) {
                ++pos_;
                auto d = unary();
                if (d.is_zero()) fail("division by zero");
                if (d.max_degree() != 0) fail("division by a non-scalar");
                acc = acc.scaled(C(1) / d.constant_term());
            } else if (starts_factor()) acc = acc * unary();
            else return acc;
        }
    }
    GradedClass<C> unary()
    {
        if (peek('-')) { ++pos_; return -unary(); }
        if (peek('+')) { ++pos_; return unary(); }
        return power();
    }
    GradedClass<C> power()
    {
        GradedClass<C> b = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) fail("exponent must be a non-negative integer");
            b = b.pow(std::stoi(s_.substr(st, pos_ - st)));
        }
        return b;
    }
    GradedClass<C> atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto v = expr();
            if (!peek(')')) fail("missing ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return GradedClass<C>(ring_, C(Rational(s_.substr(st, pos_ - st))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            std::string name = s_.substr(st, pos_ - st);
            if (ring_->has(name)) return ring_->gen(name);
            if (name == "g") return GradedClass<C>(ring_, genus_value<C>(genus_));
            // juxtaposed names such as a1a2': take the longest known prefix
            for (std::size_t len = name.size() - 1; len >= 1; --len) {
                std::string pre = name.substr(0, len);
                if (s_[st + len] == '\'') continue;
                if (ring_->has(pre)) { pos_ = st + len; return ring_->gen(pre); }
                if (pre == "g") { pos_ = st + len; return GradedClass<C>(ring_, genus_value<C>(genus_)); }
            }
            pos_ = st;
            fail("unknown generator '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
    RingPtr<C> ring_;
    std::optional<long> genus_;
};

} // namespace detail

/// Parse a class such as "(8g+12)a1 - 9a2'" in `ring`.
template <class C>
GradedClass<C> parse_class(const std::string& text, const RingPtr<C>& ring, std::optional<long> genus = std::nullopt)
{
    return detail::ExprParser<C>(text, ring, genus).parse();
}

/// Parse an element of Q(g), e.g. "(44g^2+200g+300)/(g^2+4g+3)".
inline GenusRational parse_genus_rational(const std::string& text)
{
    static const RingPtr<GenusRational> scalars = Ring<GenusRational>::make({}, 1);
    auto v = parse_class<GenusRational>(text, scalars);
    return v.constant_term();
}

} // namespace hurwitz
