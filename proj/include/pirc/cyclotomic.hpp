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

// Number-theoretic decisions about cyclic self-dual codes: multiplicative
// orders, q-cyclotomic cosets, reversibility, quadratic residues and the
// existence verdict for a chain ring with residue field F_q and nilpotency
// index e at a length n coprime to q.

#ifndef PIRC_CYCLOTOMIC_HPP
#define PIRC_CYCLOTOMIC_HPP

#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "ring.hpp"

namespace pirc {

/// Smallest l >= 1 with q^l = 1 mod n.
inline u64 ord_mod(u64 n, u64 q)
{
    ensure(n >= 2, errc::invalid_argument, "modulus must be at least 2");
    ensure(std::gcd(n, q) == 1, errc::not_coprime, "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
    const u64 qm = q % n;
    u64 x = qm;
    u64 l = 1;
    while (x != 1 % n) {
        x = mulmod(x, qm, n);
        ++l;
    }
    return l;
}

struct CosetTable {
    u64 n = 1;
    u64 q = 1;
    /// Cosets ordered by least element, each sorted ascending.
    std::vector<std::vector<u64>> cosets;
    /// coset_index[j] is the index of the coset containing j.
    std::vector<std::size_t> coset_index;

    const std::vector<u64>& coset_of(u64 j) const { return cosets[coset_index[j % n]]; }

    /// C_j == C_{-j}
    bool is_reversible(u64 j) const { return coset_index[j % n] == coset_index[(n - j % n) % n]; }
};

inline CosetTable cosets(u64 n, u64 q)
{
    ensure(n >= 1, errc::invalid_argument, "modulus must be positive");
    ensure(std::gcd(n, q) == 1, errc::not_coprime, "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
    CosetTable t;
    t.n = n;
    t.q = q;
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    t.coset_index.assign(n, unset);
    for (u64 u = 0; u < n; ++u) {
        if (t.coset_index[u] != unset)
            continue;
        std::vector<u64> c;
        u64 x = u;
        do {
            t.coset_index[x] = t.cosets.size();
            c.push_back(x);
            x = mulmod(x, q % n, n);
        } while (x != u);
        std::sort(c.begin(), c.end());
        t.cosets.push_back(std::move(c));
    }
    return t;
}

/// Least i in 1..ord_n(q) with q^i = -1 mod n, if any. Its existence is
/// exactly the reversibility of C_1, which then makes every coset reversible.
inline std::optional<u64> exists_pow_neg1(u64 n, u64 q)
{
    const u64 ord = ord_mod(n, q);
    u64 x = 1;
    for (u64 i = 1; i <= ord; ++i) {
        x = mulmod(x, q % n, n);
        if (x == n - 1)
            return i;
    }
    return std::nullopt;
}

inline bool c1_reversible(u64 n, u64 q) { return exists_pow_neg1(n, q).has_value(); }

/// Euler's criterion for an odd prime modulus.
inline bool is_quadratic_residue(u64 q, u64 m)
{
    ensure(m > 2 && is_prime(m), errc::not_odd_prime, std::to_string(m) + " is not an odd prime");
    ensure(std::gcd(q, m) == 1, errc::not_coprime, "gcd(" + std::to_string(q) + ", " + std::to_string(m) + ") != 1");
    return powmod(q, (m - 1) / 2, m) == 1;
}

enum class Status { nontrivial_exists, only_trivial, none };

constexpr std::string_view status_name(Status s) noexcept
{
    switch (s) {
    case Status::nontrivial_exists: return "NONTRIVIAL_EXISTS";
    case Status::only_trivial: return "ONLY_TRIVIAL";
    case Status::none: return "NONE";
    }
    return "?";
}

// Tags naming the rule that settled a verdict.
namespace rule {
inline constexpr std::string_view odd_length_odd_index = "en-odd";
inline constexpr std::string_view odd_index = "odd-nilpotency-index";
inline constexpr std::string_view minus_one_power = "q^i=-1-mod-n";
inline constexpr std::string_view no_minus_one_power = "no-q^i=-1-mod-n";
inline constexpr std::string_view odd_order = "odd-order-prime-power";
inline constexpr std::string_view qr_prime = "prime-3mod4-residue";
inline constexpr std::string_view qr_factors = "all-factors-3mod4-residue";
inline constexpr std::string_view componentwise = "componentwise";
}  // namespace rule

struct ExistenceVerdict {
    Status status = Status::none;
    std::string decided_by;
    /// Least i with q^i = -1 mod n when that congruence blocked existence.
    std::optional<u64> blocking_power;
    /// ord_n(q) when n >= 2.
    std::optional<u64> order;
    /// For odd prime-power n (and e even): whether the order-parity route
    /// was evaluated; it must agree with the congruence route.
    bool order_route_checked = false;
};

/// Existence of cyclic self-dual codes of length n over a chain ring with
/// residue field of size q = p^r and nilpotency index e.
inline ExistenceVerdict self_dual_verdict(u64 p, unsigned r, unsigned e, u64 n)
{
    ensure(n >= 1, errc::invalid_argument, "length must be positive");
    ensure(std::gcd(n, p) == 1, errc::not_coprime_length,
           "gcd(" + std::to_string(n) + ", " + std::to_string(p) + ") != 1");
    const u64 q = ipow(p, r);
    ExistenceVerdict v;
    if (n >= 2)
        v.order = ord_mod(n, q);
    if (e % 2 == 1) {
        // x - 1 is self-reciprocal and would need level e/2
        v.status = Status::none;
        v.decided_by = std::string(n % 2 == 1 ? rule::odd_length_odd_index : rule::odd_index);
        return v;
    }
    std::optional<u64> blocking = n <= 2 ? std::optional<u64>(1) : exists_pow_neg1(n, q);
    if (blocking) {
        v.status = Status::only_trivial;
        v.decided_by = std::string(rule::minus_one_power);
        v.blocking_power = blocking;
    } else {
        v.status = Status::nontrivial_exists;
        v.decided_by = std::string(rule::no_minus_one_power);
    }
    if (n >= 3 && n % 2 == 1 && prime_power(n).first != 0) {
        v.order_route_checked = true;
        const bool by_order = *v.order % 2 == 1;
        ensure(by_order == (v.status == Status::nontrivial_exists), errc::invariant_breach,
               "order parity and -1 congruence disagree at n = " + std::to_string(n));
    }
    return v;
}

inline ExistenceVerdict self_dual_verdict(const ChainRing& ring, u64 n)
{
    return self_dual_verdict(ring.p(), ring.r(), ring.e(), n);
}

struct SufficientCondition {
    std::string rule;
    bool exists = false;
};

/// Quadratic-residue shortcuts for odd n and even e. A prime n = 3 mod 4
/// decides existence both ways (q must be a square mod n); otherwise if every
/// prime factor p_i of n is 3 mod 4 with q a square mod p_i, codes exist.
inline std::optional<SufficientCondition> sufficient_conditions(u64 p, unsigned r, unsigned e, u64 n)
{
    if (e % 2 == 1 || n < 3 || n % 2 == 0 || std::gcd(n, p) != 1)
        return std::nullopt;
    const u64 q = ipow(p, r);
    std::optional<SufficientCondition> out;
    if (is_prime(n) && n % 4 == 3) {
        out = SufficientCondition{std::string(rule::qr_prime), is_quadratic_residue(q % n, n)};
    } else {
        bool all = true;
        for (auto [pi, k] : factorize(n)) {
            (void)k;
            all = all && pi % 4 == 3 && is_quadratic_residue(q % pi, pi);
        }
        if (all)
            out = SufficientCondition{std::string(rule::qr_factors), true};
    }
    if (out) {
        const bool verdict = self_dual_verdict(p, r, e, n).status == Status::nontrivial_exists;
        ensure(out->exists == verdict, errc::invariant_breach,
               "quadratic-residue shortcut contradicts the verdict at n = " + std::to_string(n));
    }
    return out;
}

inline std::optional<SufficientCondition> sufficient_conditions(const ChainRing& ring, u64 n)
{
    return sufficient_conditions(ring.p(), ring.r(), ring.e(), n);
}

}  // namespace pirc

#endif
