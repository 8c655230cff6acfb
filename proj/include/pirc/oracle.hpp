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

// Brute-force enumeration of constacyclic codes, independent of the
// factorization / level-map machinery. Works over any FiniteRing: vectors of
// R^n are indexed as sum_i v_i |R|^i and codes are sorted index lists.

#ifndef PIRC_ORACLE_HPP
#define PIRC_ORACLE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ring.hpp"

namespace pirc {

inline constexpr u64 oracle_full_bound = u64{1} << 14;
inline constexpr u64 oracle_closure_bound = u64{1} << 20;

template <FiniteRing Rg>
class VectorIndexer {
public:
    VectorIndexer(const Rg& ring, std::size_t n, u64 bound) : ring_(&ring), n_(n), m_(ring.size())
    {
        long double c = 1;
        for (std::size_t i = 0; i < n; ++i)
            c *= static_cast<long double>(m_);
        ensure(c <= static_cast<long double>(bound), errc::too_large_for_oracle,
               "|R|^n = " + std::to_string(static_cast<double>(c)) + " exceeds " + std::to_string(bound));
        count_ = static_cast<u64>(c);
    }

    u64 count() const noexcept { return count_; }
    std::size_t n() const noexcept { return n_; }
    const Rg& ring() const noexcept { return *ring_; }

    u64 index(const std::vector<Elt>& v) const
    {
        u64 idx = 0;
        for (std::size_t i = n_; i-- > 0;)
            idx = idx * m_ + v[i].code;
        return idx;
    }

    std::vector<Elt> vec(u64 idx) const
    {
        std::vector<Elt> v(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            v[i].code = static_cast<std::uint32_t>(idx % m_);
            idx /= m_;
        }
        return v;
    }

    u64 add(u64 a, u64 b) const
    {
        u64 out = 0, pw = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            Elt x{static_cast<std::uint32_t>(a % m_)}, y{static_cast<std::uint32_t>(b % m_)};
            out += pw * ring_->add(x, y).code;
            a /= m_;
            b /= m_;
            pw *= m_;
        }
        return out;
    }

    u64 scale(Elt s, u64 a) const
    {
        u64 out = 0, pw = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            out += pw * ring_->mul(s, Elt{static_cast<std::uint32_t>(a % m_)}).code;
            a /= m_;
            pw *= m_;
        }
        return out;
    }

    /// (lambda c_{n-1}, c_0, ..., c_{n-2})
    u64 shift(u64 a, Elt lambda) const
    {
        auto v = vec(a);
        std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
        v[0] = ring_->mul(lambda, v[0]);
        return index(v);
    }

    Elt inner(u64 a, u64 b) const
    {
        Elt acc = ring_->zero();
        for (std::size_t i = 0; i < n_; ++i) {
            acc = ring_->add(acc, ring_->mul(Elt{static_cast<std::uint32_t>(a % m_)},
                                             Elt{static_cast<std::uint32_t>(b % m_)}));
            a /= m_;
            b /= m_;
        }
        return acc;
    }

    unsigned weight(u64 a) const
    {
        unsigned w = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            w += (a % m_) != ring_->zero().code;
            a /= m_;
        }
        return w;
    }

private:
    const Rg* ring_;
    std::size_t n_;
    u64 m_;
    u64 count_ = 1;
};

/// R-linear span of the given vectors, as a sorted index list.
template <FiniteRing Rg>
std::vector<u64> span(const VectorIndexer<Rg>& V, const std::vector<u64>& gens)
{
    const Rg& R = V.ring();
    std::vector<char> seen(V.count(), 0);
    std::vector<u64> members{0};
    seen[0] = 1;
    for (u64 g : gens) {
        if (seen[g])
            continue;
        std::vector<u64> multiples;
        for (u64 s = 0; s < R.size(); ++s) {
            u64 m = V.scale(Elt{static_cast<std::uint32_t>(s)}, g);
            if (std::find(multiples.begin(), multiples.end(), m) == multiples.end())
                multiples.push_back(m);
        }
        const std::size_t before = members.size();
        for (std::size_t i = 0; i < before; ++i) {
            for (u64 m : multiples) {
                u64 w = V.add(members[i], m);
                if (!seen[w]) {
                    seen[w] = 1;
                    members.push_back(w);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

/// Ideal of R[x]/(x^n - lambda) generated by the given vectors: the span of
/// all their lambda-shifts.
template <FiniteRing Rg>
std::vector<u64> ideal_closure(const VectorIndexer<Rg>& V, Elt lambda, const std::vector<u64>& gens,
                               std::vector<u64>* spanning = nullptr)
{
    std::vector<u64> all;
    for (u64 g : gens) {
        u64 cur = g;
        for (std::size_t s = 0; s < V.n(); ++s) {
            all.push_back(cur);
            cur = V.shift(cur, lambda);
        }
    }
    if (spanning)
        *spanning = all;
    return span(V, all);
}

template <FiniteRing Rg>
bool is_shift_closed(const VectorIndexer<Rg>& V, Elt lambda, const std::vector<u64>& members)
{
    for (u64 a : members)
        if (!std::binary_search(members.begin(), members.end(), V.shift(a, lambda)))
            return false;
    return true;
}

template <FiniteRing Rg>
bool is_submodule(const VectorIndexer<Rg>& V, const std::vector<u64>& members)
{
    if (!std::binary_search(members.begin(), members.end(), u64{0}))
        return false;
    for (u64 a : members) {
        for (u64 s = 0; s < V.ring().size(); ++s)
            if (!std::binary_search(members.begin(), members.end(), V.scale(Elt{static_cast<std::uint32_t>(s)}, a)))
                return false;
        for (u64 b : members)
            if (!std::binary_search(members.begin(), members.end(), V.add(a, b)))
                return false;
    }
    return true;
}

/// Every vector orthogonal to all of `spanning`.
template <FiniteRing Rg>
std::vector<u64> brute_dual(const VectorIndexer<Rg>& V, const std::vector<u64>& spanning)
{
    std::vector<u64> out;
    const Elt zero = V.ring().zero();
    for (u64 a = 0; a < V.count(); ++a) {
        bool ok = true;
        for (u64 s : spanning) {
            if (V.inner(a, s) != zero) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(a);
    }
    return out;
}

template <FiniteRing Rg>
std::vector<u64> weight_distribution(const VectorIndexer<Rg>& V, const std::vector<u64>& members)
{
    std::vector<u64> w(V.n() + 1, 0);
    for (u64 a : members)
        ++w[V.weight(a)];
    return w;
}

template <FiniteRing Rg>
bool is_self_orthogonal(const VectorIndexer<Rg>& V, const std::vector<u64>& spanning)
{
    for (u64 a : spanning)
        for (u64 b : spanning)
            if (V.inner(a, b) != V.ring().zero())
                return false;
    return true;
}

struct OracleCode {
    std::vector<u64> members;
    std::vector<u64> spanning;
    bool self_orthogonal = false;
    bool self_dual = false;
};

struct OracleReport {
    std::string ring;
    std::size_t n = 0;
    std::string lambda;
    std::vector<OracleCode> codes;
    /// Closing the pair sums under further principal ideals added nothing.
    bool triple_stable = true;

    std::size_t count() const noexcept { return codes.size(); }
    std::size_t self_dual_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(codes.begin(), codes.end(), [](const OracleCode& c) { return c.self_dual; }));
    }
};

namespace detail {

// A + B for submodules given by sorted members and spanning vectors.
template <FiniteRing Rg>
std::vector<u64> module_sum(const VectorIndexer<Rg>& V, const std::vector<u64>& a, const std::vector<u64>& a_span,
                            const std::vector<u64>& b, const std::vector<u64>& b_span)
{
    if (std::includes(a.begin(), a.end(), b.begin(), b.end()))
        return a;
    if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
        return b;
    std::vector<u64> gens(a_span);
    gens.insert(gens.end(), b_span.begin(), b_span.end());
    return span(V, gens);
}

}  // namespace detail

/// All lambda-constacyclic codes of length n over R, found as ideals
/// generated by one vector and sums of two such ideals, checked for
/// closure and classified for self-orthogonality / self-duality by direct
/// inner products.
template <FiniteRing Rg>
OracleReport oracle_enumerate(const Rg& R, std::size_t n, Elt lambda, u64 bound = oracle_full_bound)
{
    ensure(R.is_unit(lambda), errc::not_a_unit, "lambda must be a unit");
    VectorIndexer<Rg> V(R, n, bound);

    std::vector<Elt> units;
    for (u64 s = 0; s < R.size(); ++s)
        if (R.is_unit(Elt{static_cast<std::uint32_t>(s)}))
            units.push_back(Elt{static_cast<std::uint32_t>(s)});

    std::map<std::vector<u64>, std::vector<u64>> ideals;  // members -> spanning set
    std::vector<char> done(V.count(), 0);
    for (u64 v = 0; v < V.count(); ++v) {
        if (done[v])
            continue;
        std::vector<u64> spanning;
        auto members = ideal_closure(V, lambda, {v}, &spanning);
        // u * x^s * v generates the same ideal
        u64 cur = v;
        for (std::size_t s = 0; s < n; ++s) {
            for (Elt u : units)
                done[V.scale(u, cur)] = 1;
            cur = V.shift(cur, lambda);
        }
        ideals.emplace(std::move(members), std::move(spanning));
    }

    std::vector<std::pair<std::vector<u64>, std::vector<u64>>> principal(ideals.begin(), ideals.end());
    for (std::size_t i = 0; i < principal.size(); ++i) {
        for (std::size_t j = i + 1; j < principal.size(); ++j) {
            auto s = detail::module_sum(V, principal[i].first, principal[i].second, principal[j].first,
                                        principal[j].second);
            if (ideals.count(s))
                continue;
            auto sp = principal[i].second;
            sp.insert(sp.end(), principal[j].second.begin(), principal[j].second.end());
            ideals.emplace(std::move(s), std::move(sp));
        }
    }

    OracleReport rep;
    rep.ring = R.name();
    rep.n = n;
    if constexpr (requires { R.to_string(lambda); })
        rep.lambda = R.to_string(lambda);
    else
        rep.lambda = std::to_string(lambda.code);

    // Every ideal is a sum of principal ones. Keep adding principal ideals
    // until nothing new appears; one quiet round means pairs already suffice.
    for (bool first = true;; first = false) {
        std::vector<std::pair<std::vector<u64>, std::vector<u64>>> fresh;
        for (const auto& [members, sp] : ideals) {
            for (const auto& pr : principal) {
                auto s = detail::module_sum(V, members, sp, pr.first, pr.second);
                if (ideals.count(s))
                    continue;
                auto spn = sp;
                spn.insert(spn.end(), pr.second.begin(), pr.second.end());
                fresh.emplace_back(std::move(s), std::move(spn));
            }
        }
        if (fresh.empty())
            break;
        if (first)
            rep.triple_stable = false;
        for (auto& f : fresh)
            ideals.emplace(std::move(f.first), std::move(f.second));
    }

    for (auto& [members, sp] : ideals) {
        ensure(is_shift_closed(V, lambda, members), errc::invariant_breach, "oracle ideal is not shift-closed");
        OracleCode c;
        c.members = members;
        c.spanning = sp;
        c.self_orthogonal = is_self_orthogonal(V, sp);
        c.self_dual = c.self_orthogonal && static_cast<u64>(members.size()) * members.size() == V.count();
        rep.codes.push_back(std::move(c));
    }
    return rep;
}

/// A chain-ring module M is free iff |M| = |M / gamma M|^e.
template <class ChainRingT>
bool oracle_is_free(const VectorIndexer<ChainRingT>& V, const std::vector<u64>& members)
{
    const auto& R = V.ring();
    std::vector<u64> gm;
    for (u64 a : members)
        gm.push_back(V.scale(R.gamma(), a));
    std::sort(gm.begin(), gm.end());
    gm.erase(std::unique(gm.begin(), gm.end()), gm.end());
    const u64 quotient = members.size() / gm.size();
    long double lhs = static_cast<long double>(members.size());
    long double rhs = 1;
    for (unsigned i = 0; i < R.e(); ++i)
        rhs *= static_cast<long double>(quotient);
    return lhs == rhs;
}

}  // namespace pirc

#endif
