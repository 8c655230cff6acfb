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

TEST(Oracle, Examples)
{
    auto Z4 = z_pe(2, 2);
    auto m = oracle_match(Z4, 3, Z4->one());
    EXPECT_EQ(m.report.count(), 9u);
    EXPECT_EQ(m.report.self_dual_count(), 1u);
    EXPECT_EQ(m.self_dual_levels, (std::vector<std::vector<unsigned>>{{1, 1}}));

    auto F2 = finite_field(2);
    EXPECT_EQ(oracle_match(F2, 3, F2->one()).report.count(), 4u);

    auto one = oracle_match(Z4, 1, Z4->one());
    EXPECT_EQ(one.report.count(), 3u);
    std::vector<std::size_t> sizes;
    for (const auto& c : one.report.codes)
        sizes.push_back(c.members.size());
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 4}));
}

TEST(Oracle, TooLarge)
{
    auto Z4 = z_pe(2, 2);
    try {
        oracle_enumerate(*Z4, 9, Z4->one());
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::too_large_for_oracle);
    }
}

// Theory and brute force agree on every instance small enough to list.
TEST(Oracle, MatchesStructureTheorem)
{
    struct Case {
        RingRef ring;
        std::size_t n;
    };
    std::vector<Case> cases{{z_pe(2, 2), 1}, {z_pe(2, 2), 3}, {z_pe(2, 2), 5}, {finite_field(2), 1},
                            {finite_field(2), 3}, {finite_field(3), 1}, {finite_field(3), 2}, {finite_field(3), 4},
                            {fq_u(3, 1, 2), 1}, {fq_u(3, 1, 2), 2}, {z_pe(2, 3), 3}, {z_pe(3, 2), 2},
                            {finite_field(5), 2}, {finite_field(5), 4}, {finite_field(2, 2), 3},
                            {galois_ring(2, 2, 2), 3}, {fq_u(2, 1, 3), 3}, {fq_u(2, 1, 2), 3}};
    for (const auto& c : cases)
        for (i64 lam : {1, -1}) {
            SCOPED_TRACE(c.ring->name() + " n=" + std::to_string(c.n) + " lambda=" + std::to_string(lam));
            auto m = oracle_match(c.ring, c.n, c.ring->from_int(lam));
            EXPECT_EQ(m.report.count(), m.predicted);
            if (lam != 1)
                continue;
            auto v = self_dual_verdict(*c.ring, c.n);
            bool nontrivial = false;
            for (const auto& lv : m.self_dual_levels)
                nontrivial = nontrivial || std::any_of(lv.begin(), lv.end(), [&](unsigned t) { return 2 * t != c.ring->e(); });
            EXPECT_EQ(nontrivial, v.status == Status::nontrivial_exists);
            EXPECT_EQ(m.self_dual_levels.empty(), v.status == Status::none);
        }
}

TEST(Oracle, GeneralLambda)
{
    auto R = fq_u(3, 1, 2);
    Elt lam = R->add(R->one(), R->gamma());
    auto m = oracle_match(R, 2, lam);
    EXPECT_EQ(m.report.count(), m.predicted);
}

TEST(Census, GridParsing)
{
    auto g = parse_grid("p=2,3;r=1..2;e=2;n=1,3..5;family=gr,fqu");
    EXPECT_EQ(g.p, (std::vector<u64>{2, 3}));
    EXPECT_EQ(g.r, (std::vector<u64>{1, 2}));
    EXPECT_EQ(g.n, (std::vector<u64>{1, 3, 4, 5}));
    EXPECT_EQ(g.families.size(), 2u);
    EXPECT_THROW(parse_grid("p=2;q=3"), error);
    EXPECT_THROW(parse_grid("p=two"), error);
    auto rings = grid_rings(parse_grid("p=2..4;e=1..2;family=gr,fqu"));
    std::vector<std::string> names;
    for (const auto& r : rings)
        names.push_back(r->name());
    EXPECT_EQ(names, (std::vector<std::string>{"F2", "Z/4", "F3", "Z/9", "F2[u]/u^2", "F3[u]/u^2"}));
}

TEST(Census, Z4Rows)
{
    auto rows = run_census(parse_grid("p=2;e=2;n=1..15"), true);
    ASSERT_EQ(rows.size(), 8u);
    std::vector<u64> exists;
    for (const auto& r : rows) {
        if (r.status == Status::nontrivial_exists)
            exists.push_back(r.n);
        else
            EXPECT_EQ(r.status, Status::only_trivial);
    }
    EXPECT_EQ(exists, (std::vector<u64>{7, 15}));
    const std::map<u64, u64> blocking{{3, 1}, {5, 2}, {9, 3}, {11, 5}, {13, 6}};
    for (const auto& r : rows)
        if (blocking.count(r.n)) {
            EXPECT_EQ(r.blocking_power, std::optional<u64>(blocking.at(r.n)));
        }
    EXPECT_EQ(rows[3].n, 7u);
    EXPECT_EQ(rows[3].witness_cardinality, "128");
    EXPECT_EQ(rows[3].ords, std::vector<u64>{3});
}

TEST(Census, Z8AllNone)
{
    for (const auto& r : run_census(parse_grid("p=2;e=3;n=1..31"), true)) {
        EXPECT_EQ(r.status, Status::none);
        EXPECT_TRUE(r.witness.empty());
    }
}

TEST(Census, DeterministicAcrossThreadCounts)
{
    auto g = parse_grid("p=2,3,5;r=1..2;e=1..4;n=1..20;family=gr,fqu");
    auto dump = [](const std::vector<CensusRow>& rows) {
        json a = json::array();
        for (const auto& r : rows)
            a.push_back(row_json(r));
        return a.dump();
    };
    auto one = dump(run_census(g, false, 1));
    EXPECT_EQ(one, dump(run_census(g, false, 4)));
    EXPECT_EQ(one, dump(run_census(g, false, 7)));
}

TEST(Census, WitnessIntegrity)
{
    for (const auto& r : run_census(parse_grid("p=2,3;r=1..2;e=2,4;n=1..21;family=gr,fqu"), true)) {
        if (r.status == Status::nontrivial_exists) {
            EXPECT_FALSE(r.witness.empty()) << r.ring << " " << r.n;
        }
        else
            EXPECT_TRUE(r.witness.empty());
    }
}

TEST(Census, ProductRows)
{
    std::vector<AnyRing> rings{AnyRing(make_pir({z_pe(2, 2), fq_u(2, 2, 2)})), AnyRing(PIRing::rvr(fq_u(3, 1, 2))),
                               AnyRing(make_pir({z_pe(2, 2), finite_field(3)}))};
    auto rows = run_census(rings, {1, 2, 3, 5, 7}, true);
    for (const auto& r : rows) {
        if (r.ring == "Z/4 x F3") {
            EXPECT_EQ(r.status, Status::none);
        }
        if (r.ring == "Z/4 x F4[u]/u^2" && r.n == 7) {
            EXPECT_EQ(r.status, Status::nontrivial_exists);
            EXPECT_EQ(r.ords, (std::vector<u64>{3, 3}));
            EXPECT_FALSE(r.witness.empty());
        }
    }
    // lengths divisible by a residue characteristic are skipped
    std::vector<std::pair<std::string, u64>> got;
    for (const auto& r : rows)
        got.emplace_back(r.ring, r.n);
    std::vector<std::pair<std::string, u64>> want{
        {"Z/4 x F4[u]/u^2", 1}, {"Z/4 x F4[u]/u^2", 3}, {"Z/4 x F4[u]/u^2", 5}, {"Z/4 x F4[u]/u^2", 7},
        {"F3[u]/u^2 + vF3[u]/u^2", 1}, {"F3[u]/u^2 + vF3[u]/u^2", 2}, {"F3[u]/u^2 + vF3[u]/u^2", 5},
        {"F3[u]/u^2 + vF3[u]/u^2", 7}, {"Z/4 x F3", 1}, {"Z/4 x F3", 5}, {"Z/4 x F3", 7}};
    EXPECT_EQ(got, want);
}

TEST(Census, GridTooLarge)
{
    try {
        run_census(parse_grid("p=3..100;r=1..3;e=1..4;n=1..1000"), false);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::grid_too_large);
    }
}
