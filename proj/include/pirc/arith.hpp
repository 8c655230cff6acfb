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

// Small integer number theory used across the library: primality, gcd,
// modular powers and trial-division factorization. Everything here works on
// 64-bit values with 128-bit intermediates.

#ifndef PIRC_ARITH_HPP
#define PIRC_ARITH_HPP

#include <cstdint>
#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace pirc {

using u64 = std::uint64_t;
using i64 = std::int64_t;

constexpr u64 mulmod(u64 a, u64 b, u64 m) noexcept
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr u64 powmod(u64 base, u64 exp, u64 m) noexcept
{
    if (m == 1)
        return 0;
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Exact integer power; caller guarantees no overflow.
constexpr u64 ipow(u64 base, unsigned exp) noexcept
{
    u64 r = 1;
    while (exp--)
        r *= base;
    return r;
}

constexpr bool is_prime(u64 n) noexcept
{
    if (n < 2)
        return false;
    for (u64 d : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % d == 0)
            return n == d;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing prime order.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n)
{
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d)
            continue;
        unsigned k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        out.emplace_back(d, k);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

/// If n = p^k for a prime p and k >= 1, returns {p, k}; otherwise {0, 0}.
inline std::pair<u64, unsigned> prime_power(u64 n)
{
    if (n < 2)
        return {0, 0};
    auto f = factorize(n);
    if (f.size() != 1)
        return {0, 0};
    return f.front();
}

inline std::vector<u64> divisors(u64 n)
{
    std::vector<u64> out;
    for (u64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pirc

#endif
