/*
   Copyright 2026 The pirc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Text forms accepted on the command line.
//
//   rings     Z/4  Z4  Z/9  GR(4,3)  F5  F9  F9[u]/u^2  F4[u]/(u^2)
//   products  Z/4 x F3[u]/u^2      F3 + vF3
//   elements  -1  1+2u  t^2+1  (1+t)u  [1,2,0]  (2,1)  1-2v
//   polys     3 + x + 2x^2  (1+u)x - 1  [3,1,2]
//
// In elements, t is the class of x in the residue extension (GR and F_q
// coordinates), u the uniformizer of F_q[u]/u^e, v the idempotent of R + vR.
// "[...]" lists raw coordinates for an element and ascending coefficients
// for a polynomial.

#ifndef PIRC_TEXT_HPP
#define PIRC_TEXT_HPP

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "census.hpp"
#include "poly.hpp"

namespace pirc {

template <class V>
struct ExprOps {
    std::function<V(i64)> number;
    std::function<std::optional<V>(char)> symbol;
    std::function<V(const V&, const V&)> add, sub, mul;
    std::function<V(const V&, u64)> pow;
};

namespace detail {

[[noreturn]] inline void malformed(std::string_view what, std::string_view text)
{
    fail(errc::malformed_input, std::string(what) + " in '" + std::string(text) + "'");
}

template <class V>
class ExprParser {
public:
    ExprParser(std::string_view s, const ExprOps<V>& ops) : s_(s), ops_(ops) {}

    V run()
    {
        V v = expr();
        skip();
        if (i_ != s_.size())
            malformed("unexpected '" + std::string(1, s_[i_]) + "'", s_);
        return v;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    char peek()
    {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    V expr()
    {
        char c = peek();
        bool negate = false;
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++i_;
        }
        V acc = term();
        if (negate)
            acc = ops_.sub(ops_.number(0), acc);
        for (c = peek(); c == '+' || c == '-'; c = peek()) {
            ++i_;
            V t = term();
            acc = c == '+' ? ops_.add(acc, t) : ops_.sub(acc, t);
        }
        return acc;
    }

    V term()
    {
        V acc = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++i_;
            } else if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '(')) {
                return acc;
            }
            acc = ops_.mul(acc, power());
        }
    }

    V power()
    {
        V base = atom();
        if (peek() == '^') {
            ++i_;
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            if (start == i_)
                malformed("missing exponent", s_);
            base = ops_.pow(base, std::stoull(std::string(s_.substr(start, i_ - start))));
        }
        return base;
    }

    V atom()
    {
        char c = peek();
        if (c == '(') {
            ++i_;
            V v = expr();
            if (peek() != ')')
                malformed("missing ')'", s_);
            ++i_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            if (i_ - start > 18)
                malformed("number too long", s_);
            return ops_.number(std::stoll(std::string(s_.substr(start, i_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++i_;
            if (auto v = ops_.symbol(c))
                return *v;
            malformed("unknown symbol '" + std::string(1, c) + "'", s_);
        }
        malformed(c ? "unexpected '" + std::string(1, c) + "'" : std::string("unexpected end"), s_);
    }

    std::string_view s_;
    const ExprOps<V>& ops_;
    std::size_t i_ = 0;
};

inline std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

/// Splits "a,b,(c,d),[e,f]" at top-level commas.
inline std::vector<std::string> split_top(std::string_view s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[')
            ++depth;
        if (c == ')' || c == ']')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline bool bracketed(std::string_view s, char open, char close)
{
    if (s.size() < 2 || s.front() != open || s.back() != close)
        return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == open)
            ++depth;
        if (s[i] == close && --depth == 0 && i + 1 != s.size())
            return false;
    }
    return true;
}

inline u64 field_order(std::string_view s, std::string_view text)
{
    u64 q = 0;
    try {
        q = parse_u64(s);
    } catch (const error&) {
        malformed("bad field size", text);
    }
    ensure(prime_power(q).first != 0, errc::non_prime_p, std::to_string(q) + " is not a prime power");
    return q;
}

inline RingRef parse_single_ring(std::string_view text)
{
    const std::string s = strip_spaces(text);
    std::string_view v(s);
    auto num = [&](std::string_view part) {
        try {
            return parse_u64(part);
        } catch (const error&) {
            malformed("bad number", text);
        }
    };
    auto pp = [&](u64 m) {
        auto [p, k] = prime_power(m);
        ensure(p != 0, errc::non_prime_p, std::to_string(m) + " is not a prime power");
        return std::pair<u64, unsigned>{p, k};
    };
    if (v.starts_with("GR(") && v.ends_with(")")) {
        auto args = split(v.substr(3, v.size() - 4), ',');
        if (args.size() != 2)
            malformed("GR takes (p^e, r)", text);
        auto [p, e] = pp(num(args[0]));
        return galois_ring(p, e, static_cast<unsigned>(num(args[1])));
    }
    if (v.starts_with("Z")) {
        v.remove_prefix(1);
        if (v.starts_with("/"))
            v.remove_prefix(1);
        auto [p, e] = pp(num(v));
        return z_pe(p, e);
    }
    if (v.starts_with("F")) {
        v.remove_prefix(1);
        auto br = v.find("[u]/");
        auto [p, r] = pp(field_order(v.substr(0, br), text));
        if (br == std::string_view::npos)
            return finite_field(p, r);
        auto rest = v.substr(br + 4);
        if (bracketed(rest, '(', ')'))
            rest = rest.substr(1, rest.size() - 2);
        if (!rest.starts_with("u^"))
            malformed("expected u^e", text);
        return fq_u(p, r, static_cast<unsigned>(num(rest.substr(2))));
    }
    malformed("unknown ring", text);
}

}  // namespace detail

/// Single chain ring.
inline RingRef parse_ring(std::string_view text)
{
    const std::string s = detail::strip_spaces(text);
    ensure(s.find('x') == std::string::npos && s.find("+v") == std::string::npos, errc::malformed_input,
           "'" + std::string(text) + "' is a product ring; a chain ring is expected here");
    return detail::parse_single_ring(s);
}

/// Chain ring, "A x B x ..." product, or "A + vA".
inline AnyRing parse_any_ring(std::string_view text)
{
    std::string s = detail::strip_spaces(text);
    if (auto pos = s.find("+v"); pos != std::string::npos) {
        std::string base = s.substr(0, pos), other = s.substr(pos + 2);
        ensure(base == other, errc::malformed_input, "R + vR needs the same ring twice in '" + std::string(text) + "'");
        return PIRing::rvr(detail::parse_single_ring(base));
    }
    for (std::string_view times : {"×"}) {
        for (auto p = s.find(times); p != std::string::npos; p = s.find(times))
            s.replace(p, times.size(), "x");
    }
    if (s.find('x') == std::string::npos)
        return detail::parse_single_ring(s);
    std::vector<RingRef> parts;
    for (auto part : detail::split(s, 'x'))
        parts.push_back(detail::parse_single_ring(part));
    return make_pir(std::move(parts));
}

inline ExprOps<Elt> element_ops(const ChainRing& R)
{
    ExprOps<Elt> ops;
    ops.number = [&R](i64 k) { return R.from_int(k); };
    ops.symbol = [&R](char c) -> std::optional<Elt> {
        if (c == 'u' && R.family() == Family::fq_u)
            return R.gamma();
        if (c == 't' && R.r() > 1) {
            std::vector<u64> co(R.coord_count(), 0);
            co[1] = 1;
            return R.from_coords(co);
        }
        return std::nullopt;
    };
    ops.add = [&R](Elt a, Elt b) { return R.add(a, b); };
    ops.sub = [&R](Elt a, Elt b) { return R.sub(a, b); };
    ops.mul = [&R](Elt a, Elt b) { return R.mul(a, b); };
    ops.pow = [&R](Elt a, u64 k) { return R.pow(a, k); };
    return ops;
}

inline Elt parse_element(const ChainRing& R, std::string_view text)
{
    const std::string s = detail::strip_spaces(text);
    if (detail::bracketed(s, '[', ']')) {
        std::vector<u64> co;
        for (auto& part : detail::split_top(std::string_view(s).substr(1, s.size() - 2)))
            co.push_back(detail::parse_u64(part));
        ensure(co.size() == R.coord_count(), errc::malformed_input,
               R.name() + " elements have " + std::to_string(R.coord_count()) + " coordinates");
        for (u64 c : co)
            ensure(c < R.coord_radix(), errc::malformed_input, "coordinate out of range in '" + s + "'");
        return R.from_coords(co);
    }
    if (s.empty())
        detail::malformed("empty element", text);
    return detail::ExprParser<Elt>(s, element_ops(R)).run();
}

inline Elt parse_element(const PIRing& R, std::string_view text)
{
    const std::string s = detail::strip_spaces(text);
    if (detail::bracketed(s, '(', ')')) {
        auto parts = detail::split_top(std::string_view(s).substr(1, s.size() - 2));
        if (parts.size() > 1) {
            ensure(parts.size() == R.arity(), errc::arity_mismatch,
                   R.name() + " elements have " + std::to_string(R.arity()) + " components");
            Tuple t;
            for (std::size_t i = 0; i < parts.size(); ++i)
                t.push_back(parse_element(R.component(i), parts[i]));
            return R.compose(t);
        }
    }
    ExprOps<Elt> ops;
    ops.number = [&R](i64 k) {
        Tuple t;
        for (const auto& c : R.components())
            t.push_back(c->from_int(k));
        return R.compose(t);
    };
    ops.symbol = [&R](char c) -> std::optional<Elt> {
        if (c == 'v' && R.is_rvr())
            return R.from_ab(R.component(0).zero(), R.component(0).one());
        Tuple t;
        for (const auto& comp : R.components()) {
            auto x = element_ops(*comp).symbol(c);
            if (!x)
                return std::nullopt;
            t.push_back(*x);
        }
        return R.compose(t);
    };
    ops.add = [&R](Elt a, Elt b) { return R.add(a, b); };
    ops.sub = [&R](Elt a, Elt b) { return R.sub(a, b); };
    ops.mul = [&R](Elt a, Elt b) { return R.mul(a, b); };
    ops.pow = [&R](Elt a, u64 k) { return R.pow(a, k); };
    return detail::ExprParser<Elt>(s, ops).run();
}

inline Poly parse_poly(const RingRef& R, std::string_view text)
{
    const std::string s = detail::strip_spaces(text);
    if (detail::bracketed(s, '[', ']')) {
        std::vector<Elt> c;
        if (s.size() > 2)
            for (auto& part : detail::split_top(std::string_view(s).substr(1, s.size() - 2)))
                c.push_back(parse_element(*R, part));
        return Poly(R, std::move(c));
    }
    auto el = element_ops(*R);
    ExprOps<Poly> ops;
    ops.number = [R](i64 k) { return Poly::constant(R, R->from_int(k)); };
    ops.symbol = [R, el](char c) -> std::optional<Poly> {
        if (c == 'x')
            return Poly::monomial(R, R->one(), 1);
        if (auto e = el.symbol(c))
            return Poly::constant(R, *e);
        return std::nullopt;
    };
    ops.add = [](const Poly& a, const Poly& b) { return a + b; };
    ops.sub = [](const Poly& a, const Poly& b) { return a - b; };
    ops.mul = [](const Poly& a, const Poly& b) { return a * b; };
    ops.pow = [R](const Poly& a, u64 k) {
        Poly r = Poly::constant(R, R->one());
        for (u64 i = 0; i < k; ++i)
            r = r * a;
        return r;
    };
    if (s.empty())
        detail::malformed("empty polynomial", text);
    return detail::ExprParser<Poly>(s, ops).run();
}

}  // namespace pirc

#endif
