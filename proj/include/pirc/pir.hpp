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

// Finite principal ideal rings as explicit products R_1 x ... x R_k of chain
// rings, with elements stored as tuples of component elements (packed into a
// single code so the brute-force machinery applies unchanged). Codes over
// such a ring are Chinese products CRT(C_1, ..., C_k) of component codes.
//
// R + vR (v^2 = v) is the two-component case R x R through
// a + bv -> (a + b, a); the first coordinate is the v-part, the second the
// (1 - v)-part.

#ifndef PIRC_PIR_HPP
#define PIRC_PIR_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "code.hpp"
#include "oracle.hpp"

namespace pirc {

using Tuple = std::vector<Elt>;

class PIRing;
using PirRef = std::shared_ptr<const PIRing>;

class PIRing {
public:
    explicit PIRing(std::vector<RingRef> components, std::vector<std::string> labels = {})
        : comps_(std::move(components)), labels_(std::move(labels))
    {
        ensure(!comps_.empty(), errc::invalid_argument, "a product needs at least one component");
        ensure(labels_.empty() || labels_.size() == comps_.size(), errc::arity_mismatch, "one label per component");
        long double s = 1;
        for (const auto& c : comps_)
            s *= static_cast<long double>(c->size());
        ensure(s <= static_cast<long double>(max_ring_size), errc::ring_too_large, "product ring too large");
        size_ = 1;
        for (const auto& c : comps_) {
            radix_.push_back(size_);
            size_ *= c->size();
        }
        build_tables();
    }

    /// R + vR as R x R.
    static PirRef rvr(const RingRef& base)
    {
        auto r = std::make_shared<PIRing>(std::vector<RingRef>{base, base}, std::vector<std::string>{"v", "1-v"});
        r->rvr_ = true;
        return r;
    }

    std::size_t arity() const noexcept { return comps_.size(); }
    const ChainRing& component(std::size_t i) const { return *comps_.at(i); }
    const RingRef& component_ref(std::size_t i) const { return comps_.at(i); }
    const std::vector<RingRef>& components() const noexcept { return comps_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool is_rvr() const noexcept { return rvr_; }
    u64 size() const noexcept { return size_; }

    Tuple decompose(Elt x) const
    {
        Tuple t(comps_.size());
        u64 v = x.code;
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            t[i].code = static_cast<std::uint32_t>(v % comps_[i]->size());
            v /= comps_[i]->size();
        }
        return t;
    }

    Elt compose(const Tuple& t) const
    {
        ensure(t.size() == comps_.size(), errc::arity_mismatch,
               "expected " + std::to_string(comps_.size()) + " components, got " + std::to_string(t.size()));
        u64 v = 0;
        for (std::size_t i = 0; i < comps_.size(); ++i)
            v += radix_[i] * t[i].code;
        return {static_cast<std::uint32_t>(v)};
    }

    Elt project(Elt x, std::size_t i) const
    {
        ensure(i < comps_.size(), errc::arity_mismatch, "component index out of range");
        return {static_cast<std::uint32_t>((x.code / radix_[i]) % comps_[i]->size())};
    }

    Elt zero() const noexcept { return {0}; }
    Elt one() const
    {
        Tuple t;
        for (const auto& c : comps_)
            t.push_back(c->one());
        return compose(t);
    }

    /// Indicator idempotent e_i.
    Elt idempotent(std::size_t i) const
    {
        Tuple t;
        for (std::size_t j = 0; j < comps_.size(); ++j)
            t.push_back(j == i ? comps_[j]->one() : comps_[j]->zero());
        return compose(t);
    }

    Elt add(Elt a, Elt b) const
    {
        if (!add_tab_.empty())
            return {add_tab_[a.code * size_ + b.code]};
        return zip(a, b, [](const ChainRing& R, Elt x, Elt y) { return R.add(x, y); });
    }
    Elt sub(Elt a, Elt b) const
    {
        return zip(a, b, [](const ChainRing& R, Elt x, Elt y) { return R.sub(x, y); });
    }
    Elt mul(Elt a, Elt b) const
    {
        if (!mul_tab_.empty())
            return {mul_tab_[a.code * size_ + b.code]};
        return zip(a, b, [](const ChainRing& R, Elt x, Elt y) { return R.mul(x, y); });
    }
    Elt neg(Elt a) const
    {
        return zip(a, a, [](const ChainRing& R, Elt x, Elt) { return R.neg(x); });
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

    bool is_unit(Elt a) const
    {
        auto t = decompose(a);
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!comps_[i]->is_unit(t[i]))
                return false;
        return true;
    }

    Elt inv(Elt a) const
    {
        return zip(a, a, [](const ChainRing& R, Elt x, Elt) { return R.inv(x); });
    }

    /// a + bv for R + vR.
    Elt from_ab(Elt a, Elt b) const
    {
        ensure(rvr_, errc::invalid_argument, "a + bv form needs an R + vR ring");
        const ChainRing& R = *comps_[0];
        return compose({R.add(a, b), a});
    }

    std::pair<Elt, Elt> to_ab(Elt x) const
    {
        ensure(rvr_, errc::invalid_argument, "a + bv form needs an R + vR ring");
        const ChainRing& R = *comps_[0];
        auto t = decompose(x);
        return {t[1], R.sub(t[0], t[1])};
    }

    std::string name() const
    {
        if (rvr_)
            return comps_[0]->name() + " + v" + comps_[0]->name();
        std::string s;
        for (std::size_t i = 0; i < comps_.size(); ++i)
            s += (i ? " x " : "") + comps_[i]->name();
        return s;
    }

    std::string to_string(Elt x) const
    {
        if (rvr_) {
            auto [a, b] = to_ab(x);
            const ChainRing& R = *comps_[0];
            if (b == R.zero())
                return R.to_string(a);
            std::string bs = R.to_string(b);
            if (bs.find('+') != std::string::npos)
                bs = "(" + bs + ")";
            return (a == R.zero() ? "" : R.to_string(a) + "+") + (b == R.one() ? "" : bs) + "v";
        }
        auto t = decompose(x);
        std::string s = "(";
        for (std::size_t i = 0; i < t.size(); ++i)
            s += (i ? "," : "") + comps_[i]->to_string(t[i]);
        return s + ")";
    }

    /// Decomposes a unit into component units (each must be a unit).
    Tuple unit_decompose(Elt lambda) const
    {
        auto t = decompose(lambda);
        for (std::size_t i = 0; i < t.size(); ++i)
            ensure(comps_[i]->is_unit(t[i]), errc::not_a_unit,
                   "component " + std::to_string(i) + " of " + to_string(lambda) + " is not a unit");
        return t;
    }

private:
    template <class F>
    Elt zip(Elt a, Elt b, F&& f) const
    {
        auto x = decompose(a), y = decompose(b);
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = f(*comps_[i], x[i], y[i]);
        return compose(x);
    }

    void build_tables()
    {
        if (size_ > 256)
            return;
        std::vector<std::uint32_t> add(size_ * size_), mul(size_ * size_);
        for (u64 a = 0; a < size_; ++a)
            for (u64 b = 0; b < size_; ++b) {
                Elt x{static_cast<std::uint32_t>(a)}, y{static_cast<std::uint32_t>(b)};
                add[a * size_ + b] = zip(x, y, [](const ChainRing& R, Elt s, Elt t) { return R.add(s, t); }).code;
                mul[a * size_ + b] = zip(x, y, [](const ChainRing& R, Elt s, Elt t) { return R.mul(s, t); }).code;
            }
        add_tab_ = std::move(add);
        mul_tab_ = std::move(mul);
    }

    std::vector<RingRef> comps_;
    std::vector<std::string> labels_;
    std::vector<u64> radix_;
    u64 size_ = 1;
    bool rvr_ = false;
    std::vector<std::uint32_t> add_tab_, mul_tab_;
};

inline PirRef make_pir(std::vector<RingRef> components)
{
    return std::make_shared<PIRing>(std::move(components));
}

inline Elt crt_compose(const PIRing& R, const Tuple& parts) { return R.compose(parts); }
inline Elt crt_project(const PIRing& R, Elt x, std::size_t i) { return R.project(x, i); }
inline Tuple unit_decompose(const PIRing& R, Elt lambda) { return R.unit_decompose(lambda); }

/// Vector over the product ring from component vectors of equal length.
inline Vec glue_vectors(const PIRing& R, const std::vector<Vec>& parts)
{
    ensure(parts.size() == R.arity(), errc::arity_mismatch, "one vector per component");
    const std::size_t n = parts.front().size();
    Vec out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Tuple t;
        for (const auto& p : parts) {
            ensure(p.size() == n, errc::length_mismatch, "component vectors differ in length");
            t.push_back(p[j]);
        }
        out[j] = R.compose(t);
    }
    return out;
}

// ---------------------------------------------------------------------------

class ProductCode {
public:
    ProductCode(PirRef ring, std::vector<Code> components) : ring_(std::move(ring)), comps_(std::move(components))
    {
        ensure(comps_.size() == ring_->arity(), errc::arity_mismatch, "one component code per component ring");
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            ensure(comps_[i].n() == comps_[0].n(), errc::length_mismatch, "component codes differ in length");
            ensure(comps_[i].ring().same_as(ring_->component(i)), errc::invalid_argument,
                   "component code " + std::to_string(i) + " is over the wrong ring");
        }
    }

    const PIRing& ring() const noexcept { return *ring_; }
    const PirRef& ring_ref() const noexcept { return ring_; }
    const std::vector<Code>& components() const noexcept { return comps_; }
    const Code& component(std::size_t i) const { return comps_.at(i); }
    std::size_t n() const noexcept { return comps_.front().n(); }

    Elt lambda() const
    {
        Tuple t;
        for (const auto& c : comps_)
            t.push_back(c.lambda());
        return ring_->compose(t);
    }

    BigInt cardinality() const
    {
        BigInt r = 1;
        for (const auto& c : comps_)
            r *= c.cardinality();
        return r;
    }

    /// Free iff every component is free of the same rank.
    std::optional<std::size_t> free_rank() const
    {
        std::optional<std::size_t> rank;
        for (const auto& c : comps_) {
            auto k = is_free(c);
            if (!k || (rank && *rank != *k))
                return std::nullopt;
            rank = k;
        }
        return rank;
    }

    bool contains(const Vec& v) const
    {
        ensure(v.size() == n(), errc::length_mismatch, "vector length differs from code length");
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            Vec part(v.size());
            for (std::size_t j = 0; j < v.size(); ++j)
                part[j] = ring_->project(v[j], i);
            if (!membership(part, comps_[i]))
                return false;
        }
        return true;
    }

private:
    PirRef ring_;
    std::vector<Code> comps_;
};

/// Chinese product of component codes; lambda is the CRT of their lambdas.
inline ProductCode chinese_product_code(const PirRef& ring, std::vector<Code> components)
{
    return ProductCode(ring, std::move(components));
}

/// Element set of a chain-ring code by membership over R^n (small n only).
inline std::vector<Vec> code_elements(const Code& c, u64 bound = oracle_closure_bound)
{
    VectorIndexer<ChainRing> V(c.ring(), c.n(), bound);
    std::vector<Vec> out;
    for (u64 i = 0; i < V.count(); ++i) {
        auto v = V.vec(i);
        if (membership(v, c))
            out.push_back(std::move(v));
    }
    return out;
}

/// All glued vectors CRT(v_1, ..., v_k), v_i in C_i, as sorted indices of
/// the product-ring vector space.
inline std::vector<u64> glued_elements(const ProductCode& pc, u64 bound = oracle_closure_bound)
{
    const PIRing& R = pc.ring();
    VectorIndexer<PIRing> V(R, pc.n(), bound);
    std::vector<std::vector<Vec>> parts;
    for (const auto& c : pc.components())
        parts.push_back(code_elements(c, bound));
    std::vector<u64> out;
    std::vector<std::size_t> idx(parts.size(), 0);
    for (;;) {
        std::vector<Vec> pick;
        for (std::size_t i = 0; i < parts.size(); ++i)
            pick.push_back(parts[i][idx[i]]);
        out.push_back(V.index(glue_vectors(R, pick)));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == parts[i].size())
            idx[i++] = 0;
        if (i == idx.size())
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Explicit check that the glued code is closed under the lambda-constacyclic shift.
inline bool is_constacyclic(const ProductCode& pc, Elt lambda, u64 bound = oracle_closure_bound)
{
    VectorIndexer<PIRing> V(pc.ring(), pc.n(), bound);
    return is_shift_closed(V, lambda, glued_elements(pc, bound));
}

/// CRT(C_1, ..., C_k)^perp = CRT(C_1^perp, ..., C_k^perp).
inline ProductCode product_dual(const ProductCode& pc)
{
    std::vector<Code> d;
    for (const auto& c : pc.components())
        d.push_back(is_plus_minus_one(c.ring(), c.lambda()) ? dual(c) : dual_constacyclic(c));
    return ProductCode(pc.ring_ref(), std::move(d));
}

inline bool product_self_dual(const ProductCode& pc)
{
    for (const auto& c : pc.components())
        if (!is_self_dual(c))
            return false;
    return true;
}

/// Componentwise mu for a cyclic product code; delta^n must equal lambda,
/// which holds iff it holds in every component.
inline ProductCode pir_mu(const ProductCode& pc, Elt delta, Elt lambda)
{
    const PIRing& R = pc.ring();
    auto d = R.unit_decompose(delta);
    auto l = R.unit_decompose(lambda);
    bool whole = R.pow(delta, pc.n()) == lambda;
    bool parts = true;
    for (std::size_t i = 0; i < d.size(); ++i)
        parts = parts && R.component(i).pow(d[i], pc.n()) == l[i];
    ensure(whole == parts, errc::invariant_breach, "delta^n = lambda disagrees with its components");
    ensure(whole, errc::delta_power_mismatch, R.to_string(delta) + "^" + std::to_string(pc.n()) + " != " +
                                                   R.to_string(lambda));
    std::vector<Code> out;
    for (std::size_t i = 0; i < d.size(); ++i)
        out.push_back(mu_map(pc.component(i), d[i], l[i]));
    return ProductCode(pc.ring_ref(), std::move(out));
}

/// Polynomial over a product ring, coefficient k = CRT(f_1[k], ..., f_k[k]).
inline Vec glue_polys(const PIRing& R, const std::vector<Poly>& parts, std::size_t n)
{
    std::vector<Vec> vs;
    for (const auto& p : parts)
        vs.push_back(to_vec(p, n));
    return glue_vectors(R, vs);
}

struct RvRGenerators {
    Poly f1;  ///< generates C_1 (v-part)
    Poly f2;  ///< generates C_2 ((1 - v)-part)
    Vec v_f1;            ///< v * f1
    Vec one_minus_v_f2;  ///< (1 - v) * f2
    Vec f;               ///< v f1 + (1 - v) f2
};

namespace detail {

// g generates c iff g in c and g mod f_i has valuation exactly t_i.
inline bool generates(const Poly& g, const Code& c)
{
    if (!membership(g, c))
        return false;
    for (std::size_t i = 0; i < c.factors().size(); ++i)
        if (gamma_val(g % c.factors()[i]) != c.levels()[i])
            return false;
    return true;
}

}  // namespace detail

/// Generators of a code over R + vR: the pair <v f1, (1 - v) f2> and the
/// single generator v f1 + (1 - v) f2.
inline RvRGenerators rvr_generators(const ProductCode& pc)
{
    const PIRing& R = pc.ring();
    ensure(R.is_rvr(), errc::invalid_argument, "R + vR generators need an R + vR ring");
    const std::size_t n = pc.n();
    Poly f1 = pc.component(0).principal_generator();
    Poly f2 = pc.component(1).principal_generator();
    ensure(detail::generates(f1, pc.component(0)) && detail::generates(f2, pc.component(1)),
           errc::non_principal_component, "component code is not generated by its tower sum");
    const ChainRing& base = R.component(0);
    Poly zero(R.component_ref(0));
    RvRGenerators g{f1, f2, glue_polys(R, {f1, zero}, n), glue_polys(R, {zero, f2}, n), glue_polys(R, {f1, f2}, n)};
    // v f = v f1 and (1 - v) f = (1 - v) f2
    const Elt v = R.from_ab(base.zero(), base.one());
    const Elt w = R.sub(R.one(), v);
    for (std::size_t k = 0; k < n; ++k) {
        ensure(R.mul(v, g.f[k]) == g.v_f1[k] && R.mul(w, g.f[k]) == g.one_minus_v_f2[k], errc::invariant_breach,
               "idempotent projections of the single generator are wrong");
    }
    ensure(pc.contains(g.f) && pc.contains(g.v_f1) && pc.contains(g.one_minus_v_f2), errc::invariant_breach,
           "generators left the code");
    return g;
}

/// Componentwise verdict; NONTRIVIAL_EXISTS only when every component has a
/// nontrivial cyclic self-dual code, NONE as soon as one component has none.
inline ExistenceVerdict self_dual_verdict(const PIRing& R, u64 n)
{
    ExistenceVerdict out;
    out.status = Status::nontrivial_exists;
    out.decided_by = std::string(rule::componentwise);
    for (const auto& c : R.components()) {
        auto v = self_dual_verdict(*c, n);
        if (v.status == Status::none)
            out.status = Status::none;
        else if (v.status == Status::only_trivial && out.status == Status::nontrivial_exists)
            out.status = Status::only_trivial;
        out.order_route_checked = out.order_route_checked || v.order_route_checked;
    }
    return out;
}

/// Glued witness: componentwise nontrivial construction, or the trivial code
/// where a component only admits that.
inline ProductCode construct_self_dual(const PirRef& R, std::size_t n)
{
    auto v = self_dual_verdict(*R, n);
    ensure(v.status != Status::none, errc::no_such_code, "no cyclic self-dual code over " + R->name());
    std::vector<Code> parts;
    for (const auto& c : R->components()) {
        if (self_dual_verdict(*c, n).status == Status::nontrivial_exists)
            parts.push_back(construct_self_dual(c, n));
        else
            parts.push_back(trivial_self_dual(factor_xn_minus_lambda(c, n, c->one())));
    }
    ProductCode pc(R, std::move(parts));
    ensure(product_self_dual(pc), errc::invariant_breach, "glued witness is not self-dual");
    return pc;
}

}  // namespace pirc

#endif
