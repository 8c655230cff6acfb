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

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace pirc;
using pirc::testing::P;

TEST(Poly, Z4Products)
{
    auto R = z_pe(2, 2);
    EXPECT_EQ(P(R, {-1, 1}) * P(R, {1, 1, 1}), P(R, {3, 0, 0, 1}));
    auto [q, r] = divmod(P(R, {3, 0, 0, 1}), P(R, {-1, 1}));
    EXPECT_EQ(q, P(R, {1, 1, 1}));
    EXPECT_EQ(r.degree(), -1);
    EXPECT_EQ(P(R, {3, 1, 2, 1}) * P(R, {3, 2, 3, 1}), P(R, {1, 1, 1, 1, 1, 1, 1}));
}

TEST(Poly, TextForm)
{
    auto R = z_pe(2, 2);
    EXPECT_EQ(P(R, {3, 1, 2, 1}).to_string("x"), "x^3 + 2x^2 + x + 3");
    EXPECT_EQ(Poly(R).to_string("x"), "0");
}

TEST(Poly, Reciprocal)
{
    auto R = z_pe(2, 2);
    EXPECT_EQ(reciprocal(P(R, {-1, 1})), P(R, {1, 3}));
    EXPECT_TRUE(are_associate(reciprocal(P(R, {-1, 1})), P(R, {-1, 1})));
    auto f = P(R, {3, 1, 2, 1});
    EXPECT_EQ(reciprocal(f), P(R, {1, 2, 1, 3}));
    EXPECT_EQ(monic_associate(reciprocal(f)), P(R, {3, 2, 3, 1}));
    EXPECT_THROW(reciprocal(Poly(R)), error);
}

TEST(Poly, ReciprocalSumRule)
{
    std::mt19937_64 rng(7);
    for (auto R : {z_pe(2, 2), z_pe(3, 2), fq_u(2, 2, 2)}) {
        std::uniform_int_distribution<std::uint32_t> coef(0, static_cast<std::uint32_t>(R->size() - 1));
        for (int trial = 0; trial < 200; ++trial) {
            auto rand_poly = [&](int deg) {
                std::vector<Elt> c(static_cast<std::size_t>(deg) + 1);
                for (auto& x : c)
                    x.code = coef(rng);
                // nonzero constant term so reciprocals keep their degree
                while (c.back() == R->zero())
                    c.back().code = coef(rng);
                while (c.front() == R->zero())
                    c.front().code = coef(rng);
                return Poly(R, c);
            };
            int df = 1 + static_cast<int>(rng() % 6);
            int dg = static_cast<int>(rng() % static_cast<u64>(df + 1));
            Poly f = rand_poly(df), g = rand_poly(dg);
            Poly s = f + g;
            if (s.degree() != f.degree() || s.coeff(0) == R->zero())
                continue;
            EXPECT_EQ(reciprocal(s), reciprocal(f) + reciprocal(g).shifted(static_cast<std::size_t>(df - dg)));
        }
    }
}

TEST(Poly, DivisionIdentity)
{
    std::mt19937_64 rng(11);
    auto R = galois_ring(2, 2, 2);
    std::uniform_int_distribution<std::uint32_t> coef(0, 15);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Elt> a(1 + rng() % 9), b(1 + rng() % 4);
        for (auto& x : a)
            x.code = coef(rng);
        for (auto& x : b)
            x.code = coef(rng);
        b.back() = R->one();
        Poly f(R, a), g(R, b);
        auto [q, r] = divmod(f, g);
        EXPECT_EQ(q * g + r, f);
        EXPECT_LT(r.degree(), g.degree());
    }
}

TEST(Poly, NonMonicDivisorRejected)
{
    auto R = z_pe(2, 2);
    try {
        divmod(P(R, {1, 1, 1}), P(R, {1, 2}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::non_monic_divisor);
    }
}

TEST(Poly, ResidueLiftAndGamma)
{
    auto R = z_pe(2, 2);
    auto f = P(R, {3, 1, 2, 1});
    auto fb = residue(f);
    EXPECT_EQ(fb, P(R->residue_field(), {1, 1, 0, 1}));
    EXPECT_EQ(residue(lift(fb, R)), fb);
    EXPECT_EQ(gamma_val(P(R, {2, 0, 2})), 1u);
    EXPECT_EQ(gamma_val(Poly(R)), 2u);
    EXPECT_EQ(div_gamma(P(R, {2, 0, 2}), 1), P(R, {1, 0, 1}));
    EXPECT_EQ(mul_gamma(P(R, {1, 0, 1}), 1), P(R, {2, 0, 2}));
}

TEST(Poly, ReduceModXnMinusLambda)
{
    auto R = finite_field(5);
    // x^3 = 4x mod x^2 - 4
    auto f = reduce_xn(P(R, {0, 0, 0, 1}), 2, R->from_int(4));
    EXPECT_EQ(f, P(R, {0, 4}));
}

TEST(Poly, FieldGcd)
{
    auto K = finite_field(2);
    auto a = P(K, {1, 1}) * P(K, {1, 1, 1});
    auto b = P(K, {1, 1}) * P(K, {1, 0, 1, 1});
    EXPECT_EQ(field::gcd(a, b), P(K, {1, 1}));
    auto [g, s, t] = field::xgcd(a, b);
    EXPECT_EQ(s * a + t * b, g);
    EXPECT_THROW(field::gcd(P(z_pe(2, 2), {1, 1}), P(z_pe(2, 2), {1})), error);
}

TEST(Poly, ScaleVariable)
{
    auto R = finite_field(5);
    // f(2x) for f = x - 1
    EXPECT_EQ(P(R, {-1, 1}).scale_variable(R->from_int(2)), P(R, {-1, 2}));
}
