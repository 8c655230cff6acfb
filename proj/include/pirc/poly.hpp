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

#ifndef PIRC_POLY_HPP
#define PIRC_POLY_HPP

#include <algorithm>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace pirc {

/// Dense polynomial over a chain ring (or a residue field, which is a chain
/// ring with e = 1). Coefficients are ascending and the top one is nonzero.
class Poly {
public:
    explicit Poly(RingRef ring) : ring_(std::move(ring)) {}

    Poly(RingRef ring, std::vector<Elt> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(RingRef ring, Elt c) { return Poly(std::move(ring), {c}); }

    static Poly monomial(RingRef ring, Elt c, std::size_t k)
    {
        std::vector<Elt> v(k + 1, ring->zero());
        v[k] = c;
        return Poly(std::move(ring), std::move(v));
    }

    static Poly from_ints(RingRef ring, const std::vector<i64>& coeffs)
    {
        std::vector<Elt> v;
        v.reserve(coeffs.size());
        for (i64 c : coeffs)
            v.push_back(ring->from_int(c));
        return Poly(std::move(ring), std::move(v));
    }

    /// x^n - lambda
    static Poly xn_minus(RingRef ring, std::size_t n, Elt lambda)
    {
        std::vector<Elt> v(n + 1, ring->zero());
        v[n] = ring->one();
        v[0] = ring->sub(v[0], lambda);
        return Poly(std::move(ring), std::move(v));
    }

    const RingRef& ring_ref() const noexcept { return ring_; }
    const ChainRing& ring() const noexcept { return *ring_; }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::size_t length() const noexcept { return c_.size(); }
    std::span<const Elt> coeffs() const noexcept { return c_; }

    Elt coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : ring_->zero(); }
    Elt lead() const noexcept { return c_.empty() ? ring_->zero() : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == ring_->one(); }

    Poly& operator+=(const Poly& o)
    {
        check_same(o);
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), ring_->zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = ring_->add(c_[i], o.c_[i]);
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        check_same(o);
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), ring_->zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] = ring_->sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator-() const
    {
        Poly r(*this);
        for (auto& c : r.c_)
            c = ring_->neg(c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check_same(b);
        if (a.is_zero() || b.is_zero())
            return Poly(a.ring_);
        const ChainRing& R = *a.ring_;
        std::vector<Elt> out(a.c_.size() + b.c_.size() - 1, R.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == R.zero())
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = R.add(out[i + j], R.mul(a.c_[i], b.c_[j]));
        }
        return Poly(a.ring_, std::move(out));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(Elt s) const
    {
        Poly r(*this);
        for (auto& c : r.c_)
            c = ring_->mul(c, s);
        r.trim();
        return r;
    }

    /// x^k * f
    Poly shifted(std::size_t k) const
    {
        if (is_zero())
            return *this;
        std::vector<Elt> v(k, ring_->zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(ring_, std::move(v));
    }

    /// f(s * x), i.e. c_i -> c_i * s^i.
    Poly scale_variable(Elt s) const
    {
        Poly r(*this);
        Elt pw = ring_->one();
        for (auto& c : r.c_) {
            c = ring_->mul(c, pw);
            pw = ring_->mul(pw, s);
        }
        r.trim();
        return r;
    }

    Elt eval(Elt at) const
    {
        Elt acc = ring_->zero();
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = ring_->add(ring_->mul(acc, at), c_[i]);
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        return (a.ring_ == b.ring_ || a.ring_->same_as(*b.ring_)) && a.c_ == b.c_;
    }

    /// Lexicographic from the top coefficient down, shorter first.
    friend bool degree_lex_less(const Poly& a, const Poly& b)
    {
        if (a.c_.size() != b.c_.size())
            return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

    std::string to_string(const char* var = "x") const
    {
        if (c_.empty())
            return "0";
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == ring_->zero())
                continue;
            if (any)
                os << " + ";
            any = true;
            std::string coef = ring_->to_string(c_[i]);
            bool compound = coef.find('+') != std::string::npos;
            if (i == 0)
                os << (compound && c_.size() > 1 ? "(" + coef + ")" : coef);
            else {
                if (c_[i] != ring_->one())
                    os << (compound ? "(" + coef + ")" : coef);
                os << var;
                if (i > 1)
                    os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == ring_->zero())
            c_.pop_back();
    }

    void check_same(const Poly& o) const
    {
        if (ring_ != o.ring_ && !ring_->same_as(*o.ring_))
            fail(errc::invalid_argument, "polynomials over different rings");
    }

    RingRef ring_;
    std::vector<Elt> c_;
};

/// f = q*g + rem with deg rem < deg g; g must be monic.
inline std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g)
{
    ensure(g.is_monic(), errc::non_monic_divisor, "divisor " + g.to_string() + " is not monic");
    const ChainRing& R = f.ring();
    std::vector<Elt> rem(f.coeffs().begin(), f.coeffs().end());
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    if (rem.size() <= dg)
        return {Poly(f.ring_ref()), f};
    std::vector<Elt> quo(rem.size() - dg, R.zero());
    for (std::size_t k = rem.size(); k-- > dg;) {
        Elt c = rem[k];
        if (c == R.zero())
            continue;
        quo[k - dg] = c;
        for (std::size_t i = 0; i <= dg; ++i)
            rem[k - dg + i] = R.sub(rem[k - dg + i], R.mul(c, g.coeff(i)));
    }
    rem.resize(dg);
    return {Poly(f.ring_ref(), std::move(quo)), Poly(f.ring_ref(), std::move(rem))};
}

inline Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

/// Reduction modulo x^n - lambda (x^{n+i} -> lambda x^i).
inline Poly reduce_xn(const Poly& f, std::size_t n, Elt lambda)
{
    const ChainRing& R = f.ring();
    std::vector<Elt> out(n, R.zero());
    auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        std::size_t k = i;
        Elt v = c[i];
        while (k >= n) {
            k -= n;
            v = R.mul(v, lambda);
        }
        out[k] = R.add(out[k], v);
    }
    return Poly(f.ring_ref(), std::move(out));
}

/// f*(x) = x^{deg f} f(1/x).
inline Poly reciprocal(const Poly& f)
{
    ensure(!f.is_zero(), errc::zero_polynomial, "reciprocal of the zero polynomial");
    std::vector<Elt> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.ring_ref(), std::move(v));
}

inline Poly monic_associate(const Poly& f)
{
    ensure(!f.is_zero(), errc::zero_polynomial, "monic associate of zero");
    return f.scaled(f.ring().inv(f.lead()));
}

/// f ~ g: f = u*g for a unit u of the coefficient ring (both with unit leads).
inline bool are_associate(const Poly& f, const Poly& g)
{
    if (f.is_zero() || g.is_zero())
        return f.is_zero() && g.is_zero();
    if (!f.ring().is_unit(f.lead()) || !g.ring().is_unit(g.lead()))
        return false;
    return monic_associate(f) == monic_associate(g);
}

inline Poly residue(const Poly& f)
{
    RingRef K = f.ring().residue_field();
    std::vector<Elt> v;
    v.reserve(f.length());
    for (Elt c : f.coeffs())
        v.push_back(f.ring().residue(c));
    return Poly(K, std::move(v));
}

/// Coefficientwise lift of a residue-field polynomial into R[x].
inline Poly lift(const Poly& f, const RingRef& ring)
{
    std::vector<Elt> v;
    v.reserve(f.length());
    for (Elt c : f.coeffs())
        v.push_back(ring->lift(c));
    return Poly(ring, std::move(v));
}

inline Poly mul_gamma(const Poly& f, unsigned k)
{
    std::vector<Elt> v;
    for (Elt c : f.coeffs())
        v.push_back(f.ring().mul_gamma(c, k));
    return Poly(f.ring_ref(), std::move(v));
}

inline Poly div_gamma(const Poly& f, unsigned k)
{
    std::vector<Elt> v;
    for (Elt c : f.coeffs())
        v.push_back(f.ring().div_gamma(c, k));
    return Poly(f.ring_ref(), std::move(v));
}

/// Smallest gamma-valuation among the coefficients (e for the zero polynomial).
inline unsigned gamma_val(const Poly& f)
{
    unsigned v = f.ring().e();
    for (Elt c : f.coeffs())
        v = std::min(v, f.ring().gamma_val(c));
    return v;
}

// ---------------------------------------------------------------------------
// Polynomials over a field (e == 1).

namespace field {

inline void require_field(const Poly& f)
{
    ensure(f.ring().is_field(), errc::invalid_argument, "operation needs coefficients in a field");
}

/// Monic gcd (zero when both inputs are zero).
inline Poly gcd(Poly a, Poly b)
{
    require_field(a);
    while (!b.is_zero()) {
        b = monic_associate(b);
        a = a % b;
        std::swap(a, b);
    }
    return a.is_zero() ? a : monic_associate(a);
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b)
{
    require_field(a);
    const RingRef& K = a.ring_ref();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(K, K->one()), s1(K);
    Poly t0(K), t1 = Poly::constant(K, K->one());
    while (!r1.is_zero()) {
        Elt li = K->inv(r1.lead());
        Poly m1 = r1.scaled(li);
        auto [qq, rr] = divmod(r0, m1);
        Poly q = qq.scaled(li);
        r0 = std::exchange(r1, rr);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    Elt li = K->inv(r0.lead());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly powmod(Poly base, u64 k, const Poly& m)
{
    Poly acc = Poly::constant(base.ring_ref(), base.ring().one()) % m;
    base = base % m;
    while (k) {
        if (k & 1)
            acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        k >>= 1;
    }
    return acc;
}

/// Exact quotient of a by monic-able b (b's lead is a unit in a field).
inline Poly exact_div(const Poly& a, const Poly& b)
{
    Elt li = b.ring().inv(b.lead());
    auto [q, r] = divmod(a, b.scaled(li));
    ensure(r.is_zero(), errc::not_a_divisor, b.to_string() + " does not divide " + a.to_string());
    return q.scaled(li);
}

}  // namespace field

}  // namespace pirc

#endif
