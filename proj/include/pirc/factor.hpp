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

// Factorization of x^n - lambda over a chain ring when gcd(n, p) = 1.
//
// The residue polynomial x^n - lambda-bar is squarefree over K; it is split
// by distinct-degree / equal-degree factorization and the factors are then
// lifted one gamma-adic digit at a time (linear Hensel steps) until their
// product is exact in R[x].

#ifndef PIRC_FACTOR_HPP
#define PIRC_FACTOR_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace pirc {

namespace field {

inline Poly derivative(const Poly& f)
{
    const ChainRing& K = f.ring();
    std::vector<Elt> v;
    for (std::size_t i = 1; i < f.length(); ++i)
        v.push_back(K.mul(K.from_int(static_cast<i64>(i % K.p())), f.coeff(i)));
    return Poly(f.ring_ref(), std::move(v));
}

inline Poly x_poly(const RingRef& K) { return Poly::monomial(K, K->one(), 1); }

/// Irreducibility over F_q: x^{q^d} = x mod f and gcd(f, x^{q^i} - x) = 1
/// for every i <= d/2.
inline bool is_irreducible(const Poly& f)
{
    require_field(f);
    const int d = f.degree();
    if (d < 1)
        return false;
    if (d == 1)
        return true;
    Poly m = monic_associate(f);
    const Poly x = x_poly(f.ring_ref());
    const u64 q = f.ring().size();
    Poly h = x;
    for (int i = 1; i <= d; ++i) {
        h = powmod(h, q, m);
        if (i <= d / 2 && gcd(m, h - x).degree() != 0)
            return false;
    }
    return (h - x) % m == Poly(f.ring_ref());
}

/// Distinct-degree split of a squarefree monic f: (product of all degree-d
/// irreducible factors, d) pairs.
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f)
{
    std::vector<std::pair<Poly, int>> out;
    const RingRef& K = f.ring_ref();
    const Poly x = x_poly(K);
    const u64 q = K->size();
    Poly h = x % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, q, f);
        Poly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = exact_div(f, g);
            h = h % f;
        }
    }
    if (f.degree() > 0)
        out.emplace_back(f, f.degree());
    return out;
}

namespace detail {

// a^{(q^d - 1)/2} - 1 for odd q, the trace sum a + a^2 + ... + a^{2^{m-1}}
// (q^d = 2^m) for even q; both split products of degree-d irreducibles.
inline Poly splitting_poly(const Poly& a, int d, const Poly& g)
{
    const ChainRing& K = g.ring();
    const u64 q = K.size();
    if (q % 2 == 1) {
        Poly aq = a % g;
        Poly prod = aq;
        for (int i = 1; i < d; ++i) {
            aq = powmod(aq, q, g);
            prod = mulmod(prod, aq, g);
        }
        return powmod(prod, (q - 1) / 2, g) - Poly::constant(g.ring_ref(), K.one());
    }
    unsigned m = K.r() * static_cast<unsigned>(d);
    Poly t = a % g;
    Poly acc = t;
    for (unsigned i = 1; i < m; ++i) {
        t = mulmod(t, t, g);
        acc += t;
    }
    return acc;
}

}  // namespace detail

/// Equal-degree split of a monic product of distinct degree-d irreducibles.
/// The pseudo-random choices are seeded so runs are reproducible.
inline void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out)
{
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const RingRef& K = g.ring_ref();
    std::uniform_int_distribution<u64> coef(0, K->size() - 1);
    for (;;) {
        std::vector<Elt> v(static_cast<std::size_t>(g.degree()));
        for (auto& c : v)
            c.code = static_cast<std::uint32_t>(coef(rng));
        Poly a(K, std::move(v));
        if (a.degree() < 1)
            continue;
        Poly c = gcd(g, detail::splitting_poly(a, d, g));
        if (c.degree() > 0 && c.degree() < g.degree()) {
            equal_degree(c, d, rng, out);
            equal_degree(exact_div(g, c), d, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors of a squarefree polynomial over a field, sorted
/// by degree and then lexicographically from the top coefficient down.
inline std::vector<Poly> factor_squarefree(const Poly& f)
{
    require_field(f);
    ensure(f.degree() >= 0, errc::zero_polynomial, "factoring zero");
    Poly m = monic_associate(f);
    ensure(gcd(m, derivative(m)).degree() == 0, errc::invalid_argument,
           "polynomial is not squarefree: " + m.to_string());
    std::vector<Poly> out;
    std::mt19937_64 rng(0x5eed);
    for (auto& [g, d] : distinct_degree(m))
        equal_degree(g, d, rng, out);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return degree_lex_less(a, b); });
    return out;
}

}  // namespace field

/// True iff the residue of f is irreducible over K.
inline bool is_basic_irreducible(const Poly& f)
{
    ensure(f.is_monic(), errc::invalid_argument, "basic irreducibility is tested on monic polynomials");
    return field::is_irreducible(residue(f));
}

/// Coprimality through the residue field: gcd(f-bar, g-bar) = 1.
inline bool are_coprime(const Poly& f, const Poly& g)
{
    Poly d = field::gcd(residue(f), residue(g));
    return d.degree() == 0;
}

struct Factorization {
    Poly target;  ///< x^n - lambda
    std::vector<Poly> factors;
    Elt unit;
    std::size_t n;
    Elt lambda;

    const RingRef& ring() const noexcept { return target.ring_ref(); }

    Poly product() const
    {
        Poly acc = Poly::constant(ring(), unit);
        for (const auto& f : factors)
            acc *= f;
        return acc;
    }

    /// Index of the factor equal to f, or -1.
    int index_of(const Poly& f) const
    {
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (factors[i] == f)
                return static_cast<int>(i);
        return -1;
    }
};

namespace detail {

/// Lifts T-bar = g-bar * h-bar (coprime, monic) to T = f * h exactly over R.
inline std::pair<Poly, Poly> hensel_pair(const Poly& target, const Poly& g_bar, const Poly& h_bar)
{
    const RingRef& R = target.ring_ref();
    const unsigned e = R->e();
    auto [one, s_bar, t_bar] = field::xgcd(g_bar, h_bar);
    ensure(one.degree() == 0, errc::invariant_breach, "Hensel lifting needs coprime residues");
    Poly f = lift(g_bar, R);
    Poly h = lift(h_bar, R);
    for (unsigned k = 1; k < e; ++k) {
        Poly defect = target - f * h;
        if (defect.is_zero())
            break;
        ensure(gamma_val(defect) >= k, errc::invariant_breach, "Hensel defect has low valuation");
        Poly d_bar = residue(div_gamma(defect, k));
        Poly a = (d_bar * t_bar) % g_bar;
        Poly b = field::exact_div(d_bar - a * h_bar, g_bar);
        f += mul_gamma(lift(a, R), k);
        h += mul_gamma(lift(b, R), k);
    }
    ensure(f * h == target, errc::invariant_breach, "Hensel lift is not exact");
    return {f, h};
}

}  // namespace detail

/// x^n - lambda as a product of monic, pairwise coprime basic irreducibles.
inline Factorization factor_xn_minus_lambda(const RingRef& ring, std::size_t n, Elt lambda)
{
    ensure(n >= 1, errc::invalid_argument, "length must be positive");
    ensure(std::gcd(static_cast<u64>(n), ring->p()) == 1, errc::not_coprime_length,
           "gcd(" + std::to_string(n) + ", " + std::to_string(ring->p()) + ") != 1");
    ensure(ring->is_unit(lambda), errc::not_a_unit, ring->to_string(lambda) + " is not a unit");

    Poly target = Poly::xn_minus(ring, n, lambda);
    std::vector<Poly> residues = field::factor_squarefree(residue(target));

    std::vector<Poly> lifted;
    Poly rest = target;
    Poly rest_bar = residue(target);
    for (std::size_t i = 0; i + 1 < residues.size(); ++i) {
        Poly cofactor = field::exact_div(rest_bar, residues[i]);
        auto [f, h] = detail::hensel_pair(rest, residues[i], cofactor);
        lifted.push_back(std::move(f));
        rest = std::move(h);
        rest_bar = std::move(cofactor);
    }
    lifted.push_back(rest);

    Factorization out{target, std::move(lifted), ring->one(), n, lambda};
    ensure(out.product() == target, errc::invariant_breach, "factorization product mismatch");
    return out;
}

/// (x^n - lambda) / f for f a product of factors of the factorization.
inline Poly hat(const Poly& f, const Factorization& fac)
{
    ensure(f.is_monic(), errc::not_a_divisor, f.to_string() + " is not monic");
    auto [q, r] = divmod(fac.target, f);
    ensure(r.is_zero(), errc::not_a_divisor, f.to_string() + " does not divide " + fac.target.to_string());
    return q;
}

}  // namespace pirc

#endif
