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

// Finite chain rings of three concrete families:
//
//   Z_PE         Z/p^e                       (gamma = p, r = 1)
//   GALOIS_RING  GR(p^e, r) = Z/p^e[t]/(m(t)) (gamma = p)
//   FQ_U         F_{p^r}[u]/(u^e)             (gamma = u)
//
// Elements are small integer codes (an index into the canonical enumeration
// order), so equality is code equality and values are trivially copyable.
// All arithmetic goes through the owning ring.

#ifndef PIRC_RING_HPP
#define PIRC_RING_HPP

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace pirc {

enum class Family { z_pe, galois_ring, fq_u };

/// An element of some finite ring, identified by its canonical code.
struct Elt {
    std::uint32_t code = 0;
    friend constexpr auto operator<=>(Elt, Elt) = default;
};

/// Anything the brute-force machinery can enumerate and compute in.
template <class R>
concept FiniteRing = requires(const R& ring, Elt a, Elt b) {
    { ring.size() } -> std::convertible_to<u64>;
    { ring.add(a, b) } -> std::same_as<Elt>;
    { ring.sub(a, b) } -> std::same_as<Elt>;
    { ring.mul(a, b) } -> std::same_as<Elt>;
    { ring.neg(a) } -> std::same_as<Elt>;
    { ring.zero() } -> std::same_as<Elt>;
    { ring.one() } -> std::same_as<Elt>;
    { ring.is_unit(a) } -> std::same_as<bool>;
    { ring.name() } -> std::convertible_to<std::string>;
};

inline constexpr u64 default_enumeration_bound = 10000;
inline constexpr u64 max_ring_size = u64{1} << 30;

namespace detail {

inline constexpr std::size_t max_coords = 32;
using Coords = std::array<u64, max_coords>;

// Dense polynomials over Z/m as ascending u64 vectors; only what is needed
// to pick and check moduli before any ring object exists.
using RawPoly = std::vector<u64>;

inline void raw_trim(RawPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

inline RawPoly raw_mod(RawPoly a, const RawPoly& m, u64 p)
{
    // m monic
    raw_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        u64 c = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        raw_trim(a);
    }
    return a;
}

inline RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    RawPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return raw_mod(std::move(c), m, p);
}

inline RawPoly raw_gcd(RawPoly a, RawPoly b, u64 p)
{
    raw_trim(a);
    raw_trim(b);
    while (!b.empty()) {
        u64 inv = powmod(b.back(), p - 2, p);
        for (auto& c : b)
            c = c * inv % p;
        a = raw_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

/// Rabin-style test: a monic f of degree r over F_p is irreducible iff
/// gcd(f, x^{p^i} - x) = 1 for 1 <= i <= r/2.
inline bool raw_is_irreducible(const RawPoly& f, u64 p)
{
    const std::size_t r = f.size() - 1;
    if (r == 0)
        return false;
    if (r == 1)
        return true;
    RawPoly h{0, 1};
    for (std::size_t i = 1; i <= r / 2; ++i) {
        RawPoly acc{1};
        RawPoly base = h;
        for (u64 k = p; k; k >>= 1) {
            if (k & 1)
                acc = raw_mulmod(acc, base, f, p);
            base = raw_mulmod(base, base, f, p);
        }
        h = acc;
        RawPoly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        auto g = raw_gcd(f, diff, p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

/// Smallest monic irreducible of degree r over F_p, ordering candidates by
/// sum_i c_i p^i over the non-leading coefficients.
inline RawPoly smallest_irreducible(u64 p, unsigned r)
{
    const u64 count = ipow(p, r);
    for (u64 idx = 0; idx < count; ++idx) {
        RawPoly f(r + 1, 0);
        u64 v = idx;
        for (unsigned i = 0; i < r; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[r] = 1;
        if (raw_is_irreducible(f, p))
            return f;
    }
    fail(errc::invariant_breach, "no irreducible polynomial found");
}

}  // namespace detail

class ChainRing;
using RingRef = std::shared_ptr<const ChainRing>;

RingRef make_ring(Family family, u64 p, unsigned r, unsigned e,
                  std::optional<std::vector<u64>> modulus = std::nullopt);

class ChainRing : public std::enable_shared_from_this<ChainRing> {
public:
    Family family() const noexcept { return family_; }
    u64 p() const noexcept { return p_; }
    unsigned r() const noexcept { return r_; }
    unsigned e() const noexcept { return e_; }
    /// Residue field size.
    u64 q() const noexcept { return q_; }
    u64 size() const noexcept { return size_; }
    bool is_field() const noexcept { return e_ == 1; }

    /// Characteristic in the chain-ring convention: that of the residue field.
    u64 characteristic() const noexcept { return p_; }
    u64 additive_characteristic() const noexcept { return family_ == Family::fq_u ? p_ : pe_; }

    /// Basic irreducible defining GR(p^e, r) over Z/p^e; empty for other families.
    const std::vector<u64>& modulus() const noexcept { return gr_modulus_; }
    /// Irreducible of degree r over F_p defining the residue field; empty when r == 1.
    const std::vector<u64>& field_modulus() const noexcept { return field_modulus_; }

    RingRef residue_field() const { return field_ ? field_ : shared_from_this(); }

    Elt zero() const noexcept { return {0}; }
    Elt one() const noexcept { return {1}; }
    Elt gamma() const { return mul_gamma(one(), 1); }

    Elt from_int(i64 k) const
    {
        detail::Coords c{};
        const u64 m = family_ == Family::fq_u ? p_ : pe_;
        i64 v = k % static_cast<i64>(m);
        c[0] = static_cast<u64>(v < 0 ? v + static_cast<i64>(m) : v);
        return encode(c);
    }

    Elt add(Elt a, Elt b) const
    {
        if (!add_tab_.empty())
            return {add_tab_[a.code * size_ + b.code]};
        auto x = decode(a), y = decode(b);
        for (std::size_t i = 0; i < ncoord_; ++i)
            x[i] = (x[i] + y[i]) % radix_;
        return encode(x);
    }

    Elt neg(Elt a) const
    {
        auto x = decode(a);
        for (std::size_t i = 0; i < ncoord_; ++i)
            x[i] = (radix_ - x[i]) % radix_;
        return encode(x);
    }

    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

    Elt mul(Elt a, Elt b) const
    {
        if (!mul_tab_.empty())
            return {mul_tab_[a.code * size_ + b.code]};
        return mul_slow(a, b);
    }

    Elt pow(Elt a, u64 k) const
    {
        Elt r = one();
        while (k) {
            if (k & 1)
                r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }

    /// Largest j with x in <gamma^j>; gamma_val(0) == e.
    unsigned gamma_val(Elt x) const
    {
        auto c = decode(x);
        unsigned best = e_;
        if (family_ == Family::fq_u) {
            for (unsigned j = 0; j < e_; ++j)
                for (unsigned i = 0; i < r_; ++i)
                    if (c[j * r_ + i] != 0)
                        return j;
            return e_;
        }
        for (unsigned i = 0; i < r_; ++i) {
            u64 v = c[i];
            if (v == 0)
                continue;
            unsigned k = 0;
            while (v % p_ == 0) {
                v /= p_;
                ++k;
            }
            best = std::min(best, k);
        }
        return best;
    }

    bool is_unit(Elt x) const { return gamma_val(x) == 0; }

    Elt inv(Elt x) const
    {
        ensure(is_unit(x), errc::not_a_unit, to_string(x) + " is not a unit of " + name());
        if (is_field())
            return pow(x, size_ - 2);
        Elt y = lift(field_->inv(residue(x)));
        const Elt two = from_int(2);
        // Newton iteration doubles the gamma-adic precision each step.
        for (unsigned prec = 1; prec < e_; prec *= 2)
            y = mul(y, sub(two, mul(x, y)));
        return y;
    }

    /// The j-th gamma-adic digit of x, as an element of the residue field:
    /// x = sum_j gamma^j * lift(digit(x, j)).
    Elt digit(Elt x, unsigned j) const
    {
        auto c = decode(x);
        detail::Coords d{};
        if (family_ == Family::fq_u) {
            for (unsigned i = 0; i < r_; ++i)
                d[i] = c[j * r_ + i];
        } else {
            const u64 pj = ipow(p_, j);
            for (unsigned i = 0; i < r_; ++i)
                d[i] = (c[i] / pj) % p_;
        }
        u64 code = 0;
        for (unsigned i = r_; i-- > 0;)
            code = code * p_ + d[i];
        return {static_cast<std::uint32_t>(code)};
    }

    /// Canonical projection onto the residue field K = R/<gamma>.
    Elt residue(Elt x) const { return digit(x, 0); }

    /// Coordinatewise-smallest section of the residue map.
    Elt lift(Elt a) const
    {
        detail::Coords c{};
        u64 v = a.code;
        for (unsigned i = 0; i < r_; ++i) {
            c[i] = v % p_;
            v /= p_;
        }
        return encode(c);
    }

    /// gamma^k * x.
    Elt mul_gamma(Elt x, unsigned k) const
    {
        auto c = decode(x);
        detail::Coords out{};
        if (k >= e_)
            return zero();
        if (family_ == Family::fq_u) {
            for (unsigned j = 0; j + k < e_; ++j)
                for (unsigned i = 0; i < r_; ++i)
                    out[(j + k) * r_ + i] = c[j * r_ + i];
        } else {
            const u64 pk = ipow(p_, k);
            for (unsigned i = 0; i < r_; ++i)
                out[i] = c[i] * pk % pe_;
        }
        return encode(out);
    }

    /// Drops the lowest k gamma-adic digits: sum_{j >= k} gamma^{j-k} lift(digit(x, j)).
    Elt div_gamma(Elt x, unsigned k) const
    {
        auto c = decode(x);
        detail::Coords out{};
        if (family_ == Family::fq_u) {
            for (unsigned j = k; j < e_; ++j)
                for (unsigned i = 0; i < r_; ++i)
                    out[(j - k) * r_ + i] = c[j * r_ + i];
        } else {
            const u64 pk = ipow(p_, k);
            for (unsigned i = 0; i < r_; ++i)
                out[i] = c[i] / pk;
        }
        return encode(out);
    }

    /// Canonical coordinates: r residues mod p^e for Z_PE / GALOIS_RING, and
    /// e blocks of r residues mod p (u^0 block first) for FQ_U.
    std::vector<u64> coords(Elt x) const
    {
        auto c = decode(x);
        return {c.begin(), c.begin() + static_cast<std::ptrdiff_t>(ncoord_)};
    }

    Elt from_coords(std::span<const u64> in) const
    {
        ensure(in.size() <= ncoord_, errc::invalid_argument, "too many coordinates for " + name());
        detail::Coords c{};
        for (std::size_t i = 0; i < in.size(); ++i)
            c[i] = in[i] % radix_;
        return encode(c);
    }

    std::size_t coord_count() const noexcept { return ncoord_; }
    u64 coord_radix() const noexcept { return radix_; }

    std::vector<Elt> elements(u64 bound = default_enumeration_bound) const
    {
        ensure(size_ <= bound, errc::ring_too_large,
               name() + " has " + std::to_string(size_) + " elements, bound is " + std::to_string(bound));
        std::vector<Elt> out(size_);
        for (u64 i = 0; i < size_; ++i)
            out[i].code = static_cast<std::uint32_t>(i);
        return out;
    }

    /// Text form accepted back by the ring-spec parser.
    std::string name() const
    {
        if (e_ == 1)
            return "F" + std::to_string(q_);
        switch (family_) {
        case Family::z_pe: return "Z/" + std::to_string(pe_);
        case Family::galois_ring: return "GR(" + std::to_string(pe_) + "," + std::to_string(r_) + ")";
        case Family::fq_u: return "F" + std::to_string(q_) + "[u]/u^" + std::to_string(e_);
        }
        return "?";
    }

    std::string to_string(Elt x) const
    {
        auto c = decode(x);
        if (family_ != Family::fq_u) {
            if (r_ == 1)
                return std::to_string(c[0]);
            return poly_text(std::span<const u64>(c.data(), r_), "t");
        }
        std::ostringstream os;
        bool any = false;
        for (unsigned j = 0; j < e_; ++j) {
            std::span<const u64> block(c.data() + j * r_, r_);
            bool nz = false;
            for (u64 v : block)
                nz = nz || v != 0;
            if (!nz)
                continue;
            if (any)
                os << "+";
            any = true;
            std::string coef = r_ == 1 ? std::to_string(block[0]) : poly_text(block, "t");
            if (j > 0 && coef.find('+') != std::string::npos)
                coef = "(" + coef + ")";
            if (j == 0)
                os << coef;
            else {
                if (coef != "1")
                    os << coef;
                os << "u";
                if (j > 1)
                    os << "^" << j;
            }
        }
        return any ? os.str() : "0";
    }

    /// Structural equality: same family, parameters and moduli.
    bool same_as(const ChainRing& o) const noexcept
    {
        return family_ == o.family_ && p_ == o.p_ && r_ == o.r_ && e_ == o.e_ &&
               gr_modulus_ == o.gr_modulus_ && field_modulus_ == o.field_modulus_;
    }

private:
    friend RingRef make_ring(Family, u64, unsigned, unsigned, std::optional<std::vector<u64>>);

    ChainRing() = default;

    detail::Coords decode(Elt x) const noexcept
    {
        detail::Coords c{};
        u64 v = x.code;
        for (std::size_t i = 0; i < ncoord_; ++i) {
            c[i] = v % radix_;
            v /= radix_;
        }
        return c;
    }

    Elt encode(const detail::Coords& c) const noexcept
    {
        u64 v = 0;
        for (std::size_t i = ncoord_; i-- > 0;)
            v = v * radix_ + c[i];
        return {static_cast<std::uint32_t>(v)};
    }

    // a * b mod (modulus, m) for degree < r coefficient blocks
    static void block_mul(const u64* a, const u64* b, u64* out, unsigned r, const std::vector<u64>& modulus,
                          u64 m)
    {
        std::array<u64, 2 * detail::max_coords> t{};
        for (unsigned i = 0; i < r; ++i) {
            if (a[i] == 0)
                continue;
            for (unsigned j = 0; j < r; ++j)
                t[i + j] = (t[i + j] + mulmod(a[i], b[j], m)) % m;
        }
        if (r > 1) {
            for (unsigned k = 2 * r - 2; k >= r; --k) {
                u64 c = t[k];
                if (c == 0)
                    continue;
                t[k] = 0;
                for (unsigned i = 0; i < r; ++i)
                    t[k - r + i] = (t[k - r + i] + m - mulmod(c, modulus[i], m)) % m;
            }
        }
        for (unsigned i = 0; i < r; ++i)
            out[i] = t[i];
    }

    Elt mul_slow(Elt a, Elt b) const
    {
        auto x = decode(a), y = decode(b);
        detail::Coords out{};
        if (family_ != Family::fq_u) {
            block_mul(x.data(), y.data(), out.data(), r_, gr_modulus_, pe_);
            return encode(out);
        }
        std::array<u64, detail::max_coords> tmp{};
        for (unsigned j1 = 0; j1 < e_; ++j1) {
            for (unsigned j2 = 0; j1 + j2 < e_; ++j2) {
                block_mul(x.data() + j1 * r_, y.data() + j2 * r_, tmp.data(), r_, field_modulus_, p_);
                for (unsigned i = 0; i < r_; ++i)
                    out[(j1 + j2) * r_ + i] = (out[(j1 + j2) * r_ + i] + tmp[i]) % p_;
            }
        }
        return encode(out);
    }

    static std::string poly_text(std::span<const u64> c, const char* var)
    {
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0)
                continue;
            if (any)
                os << "+";
            any = true;
            if (i == 0 || c[i] != 1)
                os << c[i];
            if (i >= 1)
                os << var;
            if (i >= 2)
                os << "^" << i;
        }
        return any ? os.str() : "0";
    }

    void build_tables()
    {
        if (size_ > 256)
            return;
        std::vector<std::uint32_t> add(size_ * size_), mul(size_ * size_);
        for (u64 a = 0; a < size_; ++a) {
            for (u64 b = 0; b < size_; ++b) {
                auto x = decode({static_cast<std::uint32_t>(a)}), y = decode({static_cast<std::uint32_t>(b)});
                for (std::size_t i = 0; i < ncoord_; ++i)
                    x[i] = (x[i] + y[i]) % radix_;
                add[a * size_ + b] = encode(x).code;
                mul[a * size_ + b] =
                    mul_slow({static_cast<std::uint32_t>(a)}, {static_cast<std::uint32_t>(b)}).code;
            }
        }
        add_tab_ = std::move(add);
        mul_tab_ = std::move(mul);
    }

    Family family_ = Family::z_pe;
    u64 p_ = 2;
    unsigned r_ = 1;
    unsigned e_ = 1;
    u64 q_ = 2;
    u64 pe_ = 2;
    u64 size_ = 2;
    std::size_t ncoord_ = 1;
    u64 radix_ = 2;
    std::vector<u64> gr_modulus_;     // over Z/p^e, monic, degree r (Z_PE: x)
    std::vector<u64> field_modulus_;  // over F_p, degree r, empty when r == 1
    RingRef field_;                   // residue field; null when this ring is a field
    std::vector<std::uint32_t> add_tab_, mul_tab_;
};

/// Constructs a chain ring. When no modulus is supplied the smallest monic
/// irreducible of degree r over F_p is used; a supplied modulus is read over
/// Z/p^e for GALOIS_RING and over F_p for FQ_U.
inline RingRef make_ring(Family family, u64 p, unsigned r, unsigned e, std::optional<std::vector<u64>> modulus)
{
    ensure(is_prime(p), errc::non_prime_p, std::to_string(p) + " is not prime");
    ensure(r >= 1 && e >= 1, errc::invalid_argument, "r and e must be at least 1");
    if (family == Family::z_pe)
        ensure(r == 1, errc::invalid_argument, "Z/p^e has r = 1");
    // size bound also caps the coordinate count at 30
    long double est = 1;
    for (unsigned i = 0; i < r * e; ++i)
        est *= static_cast<long double>(p);
    ensure(est <= static_cast<long double>(max_ring_size), errc::ring_too_large,
           "rings are limited to 2^30 elements");

    auto ring = std::shared_ptr<ChainRing>(new ChainRing());
    ChainRing& R = *ring;
    R.family_ = family;
    R.p_ = p;
    R.r_ = r;
    R.e_ = e;
    R.q_ = ipow(p, r);
    R.pe_ = ipow(p, e);
    R.size_ = ipow(R.q_, e);

    detail::RawPoly fmod;
    if (modulus) {
        auto m = *modulus;
        const u64 coef_mod = family == Family::fq_u ? p : R.pe_;
        ensure(m.size() == r + 1 && m.back() % coef_mod == 1, errc::reducible_modulus,
               "modulus must be monic of degree " + std::to_string(r));
        for (auto& c : m)
            c %= coef_mod;
        fmod = m;
        for (auto& c : fmod)
            c %= p;
        ensure(detail::raw_is_irreducible(fmod, p), errc::reducible_modulus,
               "modulus is not irreducible over F_" + std::to_string(p));
        if (family != Family::fq_u)
            R.gr_modulus_ = m;
    } else {
        fmod = detail::smallest_irreducible(p, r);
        if (family != Family::fq_u)
            R.gr_modulus_ = fmod;
    }
    if (r > 1)
        R.field_modulus_ = fmod;

    if (family == Family::fq_u) {
        R.ncoord_ = static_cast<std::size_t>(r) * e;
        R.radix_ = p;
    } else {
        R.ncoord_ = r;
        R.radix_ = R.pe_;
    }
    if (e > 1) {
        if (r == 1)
            R.field_ = make_ring(Family::z_pe, p, 1, 1);
        else
            R.field_ = make_ring(Family::galois_ring, p, r, 1, fmod);
    }
    R.build_tables();
    return ring;
}

/// Z/p^e, GR(p^e, r) or F_q[u]/(u^e) with default moduli.
inline RingRef z_pe(u64 p, unsigned e) { return make_ring(Family::z_pe, p, 1, e); }
inline RingRef galois_ring(u64 p, unsigned e, unsigned r) { return make_ring(Family::galois_ring, p, r, e); }
inline RingRef fq_u(u64 p, unsigned r, unsigned e) { return make_ring(Family::fq_u, p, r, e); }
inline RingRef finite_field(u64 p, unsigned r = 1)
{
    return r == 1 ? make_ring(Family::z_pe, p, 1, 1) : make_ring(Family::galois_ring, p, r, 1);
}

}  // namespace pirc

#endif
