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

#include "support.hpp"

using namespace pirc;

TEST(Cyclotomic, Orders)
{
    EXPECT_EQ(ord_mod(7, 2), 3u);
    EXPECT_EQ(ord_mod(3, 2), 2u);
    EXPECT_EQ(ord_mod(9, 1), 1u);
    EXPECT_EQ(ord_mod(49, 2), 21u);
    EXPECT_THROW(ord_mod(6, 2), error);
}

TEST(Cyclotomic, Cosets)
{
    auto t = cosets(7, 2);
    std::vector<std::vector<u64>> want{{0}, {1, 2, 4}, {3, 5, 6}};
    EXPECT_EQ(t.cosets, want);
    EXPECT_EQ(cosets(3, 2).cosets, (std::vector<std::vector<u64>>{{0}, {1, 2}}));
    EXPECT_EQ(cosets(5, 1).cosets.size(), 5u);
    EXPECT_FALSE(t.is_reversible(1));
    EXPECT_TRUE(cosets(3, 2).is_reversible(1));
}

TEST(Cyclotomic, MinusOnePowers)
{
    EXPECT_FALSE(c1_reversible(7, 2));
    EXPECT_EQ(exists_pow_neg1(3, 2), std::optional<u64>(1));
    EXPECT_THROW(c1_reversible(1, 2), error);
    // Z/4 blocking powers
    EXPECT_EQ(exists_pow_neg1(5, 2), std::optional<u64>(2));
    EXPECT_EQ(exists_pow_neg1(9, 2), std::optional<u64>(3));
    EXPECT_EQ(exists_pow_neg1(11, 2), std::optional<u64>(5));
    EXPECT_EQ(exists_pow_neg1(13, 2), std::optional<u64>(6));
    EXPECT_EQ(exists_pow_neg1(15, 2), std::nullopt);
}

TEST(Cyclotomic, QuadraticResidues)
{
    EXPECT_TRUE(is_quadratic_residue(2, 7));
    EXPECT_FALSE(is_quadratic_residue(2, 3));
    EXPECT_TRUE(is_quadratic_residue(1, 11));
    EXPECT_THROW(is_quadratic_residue(2, 9), error);
    EXPECT_THROW(is_quadratic_residue(7, 7), error);
}

// The cosets of q mod n describe the factorization of x^n - 1 over F_q.
TEST(Cyclotomic, CosetsMatchFactorDegrees)
{
    for (auto [p, r] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}}) {
        auto K = finite_field(p, r);
        for (u64 n = 1; n <= 20; ++n) {
            if (n % p == 0)
                continue;
            auto fac = factor_xn_minus_lambda(K, n, K->one());
            auto t = cosets(n, K->q());
            std::vector<u64> a, b;
            for (const auto& c : t.cosets)
                a.push_back(c.size());
            for (const auto& f : fac.factors)
                b.push_back(static_cast<u64>(f.degree()));
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            EXPECT_EQ(a, b) << K->name() << " n=" << n;
        }
    }
}

TEST(Cyclotomic, VerdictExamples)
{
    auto v7 = self_dual_verdict(*z_pe(2, 2), 7);
    EXPECT_EQ(v7.status, Status::nontrivial_exists);
    EXPECT_EQ(v7.order, std::optional<u64>(3));
    EXPECT_TRUE(v7.order_route_checked);

    auto v3 = self_dual_verdict(*z_pe(2, 2), 3);
    EXPECT_EQ(v3.status, Status::only_trivial);
    EXPECT_EQ(v3.blocking_power, std::optional<u64>(1));

    auto z8 = self_dual_verdict(*z_pe(2, 3), 7);
    EXPECT_EQ(z8.status, Status::none);
    EXPECT_EQ(z8.decided_by, "en-odd");

    EXPECT_EQ(self_dual_verdict(2, 1, 3, 1).status, Status::none);
    EXPECT_EQ(self_dual_verdict(3, 1, 1, 2).decided_by, "odd-nilpotency-index");
    EXPECT_EQ(self_dual_verdict(3, 1, 2, 2).status, Status::only_trivial);
    EXPECT_EQ(self_dual_verdict(2, 2, 2, 3).status, Status::nontrivial_exists);  // F4[u]/u^2
    EXPECT_THROW(self_dual_verdict(2, 1, 2, 6), error);
}

TEST(Cyclotomic, Z8OddLengthsHaveNone)
{
    for (u64 n = 1; n <= 15; n += 2)
        EXPECT_EQ(self_dual_verdict(*z_pe(2, 3), n).status, Status::none) << n;
}

TEST(Cyclotomic, Shortcuts)
{
    auto a = sufficient_conditions(*z_pe(2, 2), 7);
    ASSERT_TRUE(a);
    EXPECT_EQ(a->rule, "prime-3mod4-residue");
    EXPECT_TRUE(a->exists);
    auto b = sufficient_conditions(*z_pe(2, 2), 3);
    ASSERT_TRUE(b);
    EXPECT_FALSE(b->exists);
    auto c = sufficient_conditions(*z_pe(2, 2), 49);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->rule, "all-factors-3mod4-residue");
    EXPECT_TRUE(c->exists);
    EXPECT_FALSE(sufficient_conditions(*z_pe(2, 2), 5));
    EXPECT_FALSE(sufficient_conditions(*z_pe(2, 3), 7));
    // the residue field size decides: 4 is a square mod 3 though 2 is not
    auto d = sufficient_conditions(*fq_u(2, 2, 2), 3);
    ASSERT_TRUE(d);
    EXPECT_TRUE(d->exists);
}

// Property sweep: verdict fields stay mutually consistent and both decision
// routes agree wherever both apply.
TEST(Cyclotomic, VerdictConsistencySweep)
{
    for (u64 p : {2, 3, 5, 7})
        for (unsigned r : {1u, 2u, 3u})
            for (unsigned e : {1u, 2u, 3u, 4u})
                for (u64 n = 1; n <= 60; ++n) {
                    if (n % p == 0)
                        continue;
                    auto v = self_dual_verdict(p, r, e, n);
                    if (v.status == Status::only_trivial) {
                        EXPECT_EQ(e % 2, 0u);
                    }
                    EXPECT_EQ(v.status == Status::none, e % 2 == 1);
                    const u64 q = ipow(p, r);
                    if (n >= 3 && exists_pow_neg1(n, q)) {
                        EXPECT_EQ(ord_mod(n, q) % 2, 0u);
                    }
                    if (e % 2 == 0 && n % 2 == 1 && n >= 3 && prime_power(n).first != 0) {
                        EXPECT_EQ(v.status == Status::nontrivial_exists, ord_mod(n, q) % 2 == 1);
                    }
                    sufficient_conditions(p, r, e, n);  // asserts internally
                }
}
