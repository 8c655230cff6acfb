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
using pirc::testing::P;

namespace {

Factorization fac(const RingRef& R, std::size_t n, Elt lambda) { return factor_xn_minus_lambda(R, n, lambda); }

Code with_generator(const Factorization& F, const Poly& g)
{
    // level of each factor = gamma-valuation of g mod it
    std::vector<unsigned> lv;
    for (const auto& f : F.factors)
        lv.push_back(gamma_val(g % f));
    return build_code(F, lv);
}

}  // namespace

TEST(Pir, CrtCompose)
{
    auto F3 = finite_field(3);
    auto R = PIRing::rvr(F3);
    Elt x = R->from_ab(F3->one(), F3->one());
    EXPECT_EQ(R->decompose(x), (Tuple{F3->from_int(2), F3->one()}));
    for (std::uint32_t c = 0; c < R->size(); ++c) {
        auto t = R->decompose(Elt{c});
        EXPECT_EQ(crt_compose(*R, t), Elt{c});
        auto [a, b] = R->to_ab(Elt{c});
        EXPECT_EQ(R->from_ab(a, b), Elt{c});
        for (std::size_t i = 0; i < 2; ++i)
            EXPECT_EQ(crt_project(*R, Elt{c}, i), t[i]);
    }
    auto single = make_pir({z_pe(2, 2)});
    for (std::uint32_t c = 0; c < 4; ++c)
        EXPECT_EQ(single->decompose(Elt{c}), Tuple{Elt{c}});
    EXPECT_THROW(R->compose(Tuple{F3->one()}), error);
}

TEST(Pir, RingAxiomsAndIdempotents)
{
    auto R = make_pir({z_pe(2, 2), finite_field(3)});
    EXPECT_EQ(R->size(), 12u);
    Elt e0 = R->idempotent(0), e1 = R->idempotent(1);
    EXPECT_EQ(R->mul(e0, e0), e0);
    EXPECT_EQ(R->mul(e0, e1), R->zero());
    EXPECT_EQ(R->add(e0, e1), R->one());
    for (std::uint32_t a = 0; a < 12; ++a)
        for (std::uint32_t b = 0; b < 12; ++b) {
            auto ta = R->decompose(Elt{a}), tb = R->decompose(Elt{b});
            auto prod = R->decompose(R->mul(Elt{a}, Elt{b}));
            EXPECT_EQ(prod[0], R->component(0).mul(ta[0], tb[0]));
            EXPECT_EQ(prod[1], R->component(1).mul(ta[1], tb[1]));
        }
    EXPECT_EQ(R->name(), "Z/4 x F3");
}

TEST(Pir, UnitDecompose)
{
    auto F3 = finite_field(3);
    auto R = PIRing::rvr(F3);
    EXPECT_EQ(unit_decompose(*R, R->one()), (Tuple{F3->one(), F3->one()}));
    // 1 - 2v = 1 + v
    Elt lam = R->from_ab(F3->one(), F3->from_int(-2));
    EXPECT_EQ(lam, R->from_ab(F3->one(), F3->one()));
    EXPECT_EQ(unit_decompose(*R, lam), (Tuple{F3->from_int(-1), F3->one()}));
    try {
        unit_decompose(*R, R->compose({F3->zero(), F3->one()}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::not_a_unit);
    }
}

TEST(Pir, SingleComponentProduct)
{
    auto Z4 = z_pe(2, 2);
    Code c = build_code(fac(Z4, 7, Z4->one()), {1, 0, 2});
    ProductCode pc = chinese_product_code(make_pir({Z4}), {c});
    EXPECT_EQ(pc.cardinality(), c.cardinality());
    EXPECT_TRUE(product_self_dual(pc));
}

TEST(Pir, GlueNegacyclicAndCyclic)
{
    auto F3 = finite_field(3);
    auto R = PIRing::rvr(F3);
    const Elt lam = R->compose({F3->from_int(-1), F3->one()});
    EXPECT_EQ(lam, R->from_ab(F3->one(), F3->from_int(-2)));
    for (std::size_t n : {2, 4}) {
        auto F1 = fac(F3, n, F3->from_int(-1));
        auto F2 = fac(F3, n, F3->one());
        for (const auto& s1 : all_specs(F1))
            for (const auto& s2 : all_specs(F2)) {
                ProductCode pc = chinese_product_code(R, {build_code(s1), build_code(s2)});
                EXPECT_EQ(pc.lambda(), lam);
                auto glued = glued_elements(pc);
                EXPECT_EQ(BigInt(glued.size()), pc.cardinality());
                EXPECT_EQ(pc.cardinality(), pc.component(0).cardinality() * pc.component(1).cardinality());
                EXPECT_TRUE(is_constacyclic(pc, lam));
                // closed under the plain cyclic shift exactly when the negacyclic part is
                VectorIndexer<ChainRing> V(*F3, n, 1 << 14);
                const bool c1_cyclic = is_shift_closed(V, F3->one(), pirc::testing::members_of(pc.component(0), V));
                EXPECT_EQ(is_constacyclic(pc, R->one()), c1_cyclic);
            }
    }
}

TEST(Pir, RvRGeneratorExample)
{
    auto F3 = finite_field(3);
    auto R = PIRing::rvr(F3);
    const std::size_t n = 2;
    const Elt lam = R->compose({F3->from_int(-1), F3->one()});
    auto F1 = fac(F3, n, F3->from_int(-1));
    auto F2 = fac(F3, n, F3->one());
    Poly f1 = P(F3, {1, 1}), f2 = P(F3, {-1, 1});
    ProductCode pc(R, {with_generator(F1, f1), with_generator(F2, f2)});
    Vec f = glue_polys(*R, {f1, f2}, n);
    // x + (2v - 1)
    EXPECT_EQ(f[1], R->one());
    EXPECT_EQ(f[0], R->from_ab(F3->from_int(-1), F3->from_int(2)));
    VectorIndexer<PIRing> V(*R, n, 1 << 14);
    EXPECT_EQ(ideal_closure(V, lam, {V.index(f)}), glued_elements(pc));
    EXPECT_TRUE(is_shift_closed(V, lam, ideal_closure(V, lam, {V.index(f)})));
}

TEST(Pir, RvRGeneratorsAndDual)
{
    auto F3 = finite_field(3);
    auto R = PIRing::rvr(F3);
    for (std::size_t n : {1, 2, 4}) {
        for (auto lam_t : {Tuple{F3->from_int(-1), F3->one()}, Tuple{F3->from_int(-1), F3->from_int(-1)}}) {
            const Elt lam = R->compose(lam_t);
            auto F1 = fac(F3, n, lam_t[0]);
            auto F2 = fac(F3, n, lam_t[1]);
            VectorIndexer<PIRing> V(*R, n, 1 << 14);
            for (const auto& s1 : all_specs(F1))
                for (const auto& s2 : all_specs(F2)) {
                    ProductCode pc(R, {build_code(s1), build_code(s2)});
                    auto g = rvr_generators(pc);
                    auto pair = ideal_closure(V, lam, {V.index(g.v_f1), V.index(g.one_minus_v_f2)});
                    auto single = ideal_closure(V, lam, {V.index(g.f)});
                    auto glued = glued_elements(pc);
                    EXPECT_EQ(pair, single);
                    EXPECT_EQ(single, glued);

                    ProductCode d = product_dual(pc);
                    auto h = rvr_generators(d);
                    const Elt lam_inv = R->inv(lam);
                    auto dual_span = ideal_closure(V, lam_inv, {V.index(h.f)});
                    std::vector<u64> spanning;
                    ideal_closure(V, lam, {V.index(g.f)}, &spanning);
                    EXPECT_EQ(dual_span, brute_dual(V, spanning));
                    EXPECT_EQ(product_self_dual(pc), dual_span == glued);
                }
        }
    }
}

TEST(Pir, ConstantGenerator)
{
    auto F3 = finite_field(3);
    auto R = PIRing::rvr(F3);
    auto F = fac(F3, 4, F3->one());
    Code c = build_code(F, {0, 1, 0});
    ProductCode pc(R, {c, c});
    auto g = rvr_generators(pc);
    EXPECT_EQ(g.f1, g.f2);
    for (Elt x : g.f)
        EXPECT_EQ(R->to_ab(x).second, F3->zero());
}

TEST(Pir, ProductSelfDuality)
{
    auto Z4 = z_pe(2, 2), F3u = fq_u(3, 1, 2);
    auto R = make_pir({Z4, F3u});
    auto w = construct_self_dual(Z4, 7);
    auto t = trivial_self_dual(fac(F3u, 7, F3u->one()));
    ProductCode pc(R, {w, t});
    EXPECT_TRUE(product_self_dual(pc));
    EXPECT_EQ(pc.cardinality() * pc.cardinality(), big_pow(R->size(), 7));
    ProductCode pd = product_dual(pc);
    EXPECT_EQ(pd.component(0), w);
    EXPECT_EQ(pd.component(1), t);

    ProductCode triv(R, {trivial_self_dual(fac(Z4, 7, Z4->one())), t});
    EXPECT_TRUE(product_self_dual(triv));
    ProductCode full(R, {full_code(fac(Z4, 7, Z4->one())), t});
    EXPECT_FALSE(product_self_dual(full));

    auto glued = construct_self_dual(R, 7);
    EXPECT_TRUE(product_self_dual(glued));
}

TEST(Pir, OddIndexComponentKillsSelfDuality)
{
    auto Z4 = z_pe(2, 2), F3 = finite_field(3);
    auto R = make_pir({Z4, F3});
    for (std::size_t n : {1, 5, 7}) {
        EXPECT_EQ(self_dual_verdict(*R, n).status, Status::none);
        auto F1 = fac(Z4, n, Z4->one());
        auto F2 = fac(F3, n, F3->one());
        for (const auto& s1 : all_specs(F1))
            for (const auto& s2 : all_specs(F2))
                EXPECT_FALSE(product_self_dual(ProductCode(R, {build_code(s1), build_code(s2)})));
    }
    EXPECT_THROW(construct_self_dual(R, 7), error);
}

TEST(Pir, VerdictIsComponentwise)
{
    auto Z4 = z_pe(2, 2), F4u = fq_u(2, 2, 2), F3u = fq_u(3, 1, 2);
    EXPECT_EQ(self_dual_verdict(*make_pir({Z4, F4u}), 7).status, Status::nontrivial_exists);
    EXPECT_EQ(self_dual_verdict(*make_pir({Z4, F3u}), 7).status, Status::only_trivial);
    EXPECT_EQ(self_dual_verdict(*make_pir({Z4, F3u}), 5).status, Status::only_trivial);
    EXPECT_EQ(self_dual_verdict(*make_pir({Z4, z_pe(2, 3)}), 7).status, Status::none);
    EXPECT_EQ(self_dual_verdict(*make_pir({Z4, F4u}), 7).decided_by, "componentwise");
}

TEST(Pir, MuComponentwise)
{
    auto F5 = finite_field(5);
    auto R = PIRing::rvr(F5);
    const std::size_t n = 2;
    auto cyc = fac(F5, n, F5->one());
    const Elt delta = R->compose({F5->from_int(2), F5->one()});
    const Elt lam = R->compose({F5->from_int(4), F5->one()});
    for (const auto& s1 : all_specs(cyc))
        for (const auto& s2 : all_specs(cyc)) {
            ProductCode pc(R, {build_code(s1), build_code(s2)});
            ProductCode m = pir_mu(pc, delta, lam);
            EXPECT_EQ(m.component(0), mu_map(pc.component(0), F5->from_int(2), F5->from_int(4)));
            EXPECT_EQ(m.component(1), pc.component(1));
            EXPECT_EQ(m.cardinality(), pc.cardinality());
            VectorIndexer<PIRing> V(*R, n, 1 << 14);
            auto a = glued_elements(pc), b = glued_elements(m);
            EXPECT_EQ(weight_distribution(V, a), weight_distribution(V, b));
            EXPECT_TRUE(is_constacyclic(m, lam));
        }
    ProductCode pc(R, {full_code(cyc), full_code(cyc)});
    EXPECT_EQ(pir_mu(pc, R->one(), R->one()).component(0), pc.component(0));
    // 2 is not a square mod 5, so lambda = (2, 1) has no square root delta
    const Elt bad = R->compose({F5->from_int(2), F5->one()});
    try {
        pir_mu(pc, delta, bad);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::delta_power_mismatch);
    }
    EXPECT_EQ(find_nth_root(*F5, F5->from_int(2), 2), std::nullopt);
}

// Free codes of different ranks glue to a code that is not free: over
// F2 x F3 a rank-one and a rank-two component give 2 * 9 = 18 words.
TEST(Pir, FreeRankCaveat)
{
    auto F2 = finite_field(2), F3 = finite_field(3);
    auto R = make_pir({F2, F3});
    VectorIndexer<PIRing> V(*R, 2, 1 << 14);
    Vec a = glue_vectors(*R, {{F2->one(), F2->one()}, {F3->one(), F3->zero()}});
    Vec b = glue_vectors(*R, {{F2->zero(), F2->zero()}, {F3->zero(), F3->one()}});
    auto s = span(V, {V.index(a), V.index(b)});
    EXPECT_EQ(s.size(), 18u);
    for (u64 k = 0, pk = 1; pk <= 36; ++k, pk *= 6)
        EXPECT_NE(s.size(), pk);

    // cyclic version at n = 5: ranks 1 and 4
    auto A = fac(F2, 5, F2->one());
    auto B = fac(F3, 5, F3->one());
    Code c1 = build_code(A, {0, 1});
    Code c2 = build_code(B, {1, 0});
    ProductCode pc(R, {c1, c2});
    EXPECT_EQ(is_free(c1), std::optional<std::size_t>(1));
    EXPECT_EQ(is_free(c2), std::optional<std::size_t>(4));
    EXPECT_EQ(pc.free_rank(), std::nullopt);
    EXPECT_EQ(pc.cardinality(), 162);
    ProductCode same(R, {build_code(A, {1, 0}), build_code(B, {1, 0})});
    EXPECT_EQ(same.free_rank(), std::optional<std::size_t>(4));
}

TEST(Pir, OracleCountsMultiply)
{
    auto F3 = finite_field(3);
    auto R = PIRing::rvr(F3);
    const Elt lam = R->compose({F3->from_int(-1), F3->one()});
    auto rep = oracle_enumerate(*R, 2, lam);
    // x^2 + 1 is irreducible over F3, x^2 - 1 has two factors
    EXPECT_EQ(rep.count(), 2u * 4u);
    EXPECT_EQ(rep.self_dual_count(), 0u);
}

TEST(Pir, Errors)
{
    auto F3 = finite_field(3), Z4 = z_pe(2, 2);
    auto R = make_pir({Z4, F3});
    Code a = full_code(fac(Z4, 5, Z4->one()));
    Code b = full_code(fac(F3, 7, F3->one()));
    try {
        ProductCode(R, {a, b});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::length_mismatch);
    }
    try {
        ProductCode(R, {a});
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::arity_mismatch);
    }
}
