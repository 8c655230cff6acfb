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

// Shared helpers for the test suite. Nothing here calls the library's own
// factorization or duality routines.

#ifndef PIRC_TESTS_SUPPORT_HPP
#define PIRC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <ostream>
#include <vector>

#include "pirc/pirc.hpp"

namespace pirc {

inline void PrintTo(const Poly& f, std::ostream* os) { *os << f.to_string("x"); }
inline void PrintTo(Elt x, std::ostream* os) { *os << "#" << x.code; }

}  // namespace pirc

namespace pirc::testing {

/// All monic polynomials of degree d over the field K.
inline std::vector<Poly> monic_polys(const RingRef& K, int d)
{
    std::vector<Poly> out;
    const u64 q = K->size();
    u64 total = 1;
    for (int i = 0; i < d; ++i)
        total *= q;
    for (u64 idx = 0; idx < total; ++idx) {
        std::vector<Elt> c(static_cast<std::size_t>(d) + 1);
        u64 v = idx;
        for (int i = 0; i < d; ++i) {
            c[i].code = static_cast<std::uint32_t>(v % q);
            v /= q;
        }
        c[d] = K->one();
        out.emplace_back(K, c);
    }
    return out;
}

/// Factorization by trial division with every monic polynomial in degree
/// order. Returns the monic irreducible factors sorted by the library's
/// canonical order so the two lists compare directly.
inline std::vector<Poly> trial_division_factor(Poly f)
{
    const RingRef K = f.ring_ref();
    std::vector<Poly> out;
    f = monic_associate(f);
    for (int d = 1; f.degree() > 0; ++d) {
        if (2 * d > f.degree()) {
            out.push_back(f);
            break;
        }
        for (const auto& g : monic_polys(K, d)) {
            for (;;) {
                auto [quo, rem] = divmod(f, g);
                if (rem.degree() >= 0)
                    break;
                out.push_back(g);
                f = quo;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return degree_lex_less(a, b); });
    return out;
}

inline Poly P(const RingRef& R, std::vector<i64> c) { return Poly::from_ints(R, c); }

/// Ideal over a chain ring as a sorted index list of the vector space R^n.
inline std::vector<u64> members_of(const Code& c, const VectorIndexer<ChainRing>& V)
{
    std::vector<u64> out;
    for (u64 a = 0; a < V.count(); ++a)
        if (membership(V.vec(a), c))
            out.push_back(a);
    return out;
}

}  // namespace pirc::testing

#endif
