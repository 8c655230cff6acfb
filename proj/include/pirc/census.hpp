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

#ifndef PIRC_CENSUS_HPP
#define PIRC_CENSUS_HPP

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "oracle.hpp"
#include "pir.hpp"

namespace pirc {

inline constexpr std::size_t max_census_rows = 10000;

/// Grid text: "p=2,3;r=1;e=1..4;n=1..15" with an optional
/// "family=gr,fqu" key. "gr" means Z/p^e for r = 1 and GR(p^e, r) otherwise;
/// "fqu" means F_{p^r}[u]/u^e. Values of p that are not prime are skipped.
struct GridSpec {
    std::vector<u64> p{2};
    std::vector<u64> r{1};
    std::vector<u64> e{1};
    std::vector<u64> n{1};
    std::vector<std::string> families{"gr"};
};

namespace detail {

inline u64 parse_u64(std::string_view s)
{
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    ensure(ec == std::errc() && ptr == s.data() + s.size() && !s.empty(), errc::malformed_input,
           "not a non-negative integer: '" + std::string(s) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

/// "1,3,5..9" -> {1,3,5,6,7,8,9}
inline std::vector<u64> parse_int_list(std::string_view s)
{
    std::vector<u64> out;
    for (auto item : split(s, ',')) {
        item = trim(item);
        auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_u64(item));
            continue;
        }
        u64 lo = parse_u64(trim(item.substr(0, dots))), hi = parse_u64(trim(item.substr(dots + 2)));
        ensure(lo <= hi && hi - lo <= max_census_rows, errc::malformed_input, "bad range '" + std::string(item) + "'");
        for (u64 v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

inline GridSpec parse_grid(std::string_view text)
{
    GridSpec g;
    for (auto part : detail::split(text, ';')) {
        part = detail::trim(part);
        if (part.empty())
            continue;
        auto eq = part.find('=');
        ensure(eq != std::string_view::npos, errc::malformed_input, "grid entries look like key=values");
        auto key = detail::trim(part.substr(0, eq));
        auto val = detail::trim(part.substr(eq + 1));
        if (key == "family") {
            g.families.clear();
            for (auto f : detail::split(val, ',')) {
                f = detail::trim(f);
                ensure(f == "gr" || f == "fqu", errc::malformed_input, "unknown family '" + std::string(f) + "'");
                g.families.emplace_back(f);
            }
        } else if (key == "p") {
            g.p = detail::parse_int_list(val);
        } else if (key == "r") {
            g.r = detail::parse_int_list(val);
        } else if (key == "e") {
            g.e = detail::parse_int_list(val);
        } else if (key == "n") {
            g.n = detail::parse_int_list(val);
        } else {
            fail(errc::malformed_input, "unknown grid key '" + std::string(key) + "'");
        }
    }
    for (u64 r : g.r)
        ensure(r >= 1, errc::invalid_argument, "r must be positive");
    for (u64 e : g.e)
        ensure(e >= 1, errc::invalid_argument, "e must be positive");
    for (u64 n : g.n)
        ensure(n >= 1, errc::invalid_argument, "n must be positive");
    return g;
}

/// A census subject: a single chain ring or a product of them.
using AnyRing = std::variant<RingRef, PirRef>;

inline std::string ring_name(const AnyRing& r)
{
    return std::visit([](const auto& x) { return x->name(); }, r);
}

inline std::vector<RingRef> ring_components(const AnyRing& r)
{
    if (auto c = std::get_if<RingRef>(&r))
        return {*c};
    return std::get<PirRef>(r)->components();
}

/// Chain rings of the grid in (family, p, r, e) order, without duplicates.
inline std::vector<RingRef> grid_rings(const GridSpec& g)
{
    std::vector<RingRef> out;
    std::vector<std::string> names;
    for (const auto& fam : g.families)
        for (u64 p : g.p) {
            if (!is_prime(p))
                continue;
            for (u64 r : g.r)
                for (u64 e : g.e) {
                    RingRef R;
                    if (fam == "fqu")
                        R = fq_u(p, static_cast<unsigned>(r), static_cast<unsigned>(e));
                    else if (r == 1)
                        R = z_pe(p, static_cast<unsigned>(e));
                    else
                        R = galois_ring(p, static_cast<unsigned>(e), static_cast<unsigned>(r));
                    if (std::find(names.begin(), names.end(), R->name()) != names.end())
                        continue;
                    names.push_back(R->name());
                    out.push_back(std::move(R));
                }
        }
    return out;
}

struct CensusRow {
    std::string ring;
    u64 n = 0;
    Status status = Status::none;
    std::string decided_by;
    /// ord_n(q_i) per component (empty for n = 1).
    std::vector<u64> ords;
    std::optional<u64> blocking_power;
    /// Quadratic-residue shortcut that applied, if any (single rings only).
    std::string shortcut;
    /// Witness summary for constructed rows: level maps and |C|.
    std::string witness;
    std::string witness_cardinality;
};

namespace detail {

inline std::string levels_text(const std::vector<unsigned>& lv)
{
    std::string s = "[";
    for (std::size_t i = 0; i < lv.size(); ++i)
        s += (i ? "," : "") + std::to_string(lv[i]);
    return s + "]";
}

inline void check_order_lemma(const ChainRing& R, u64 n)
{
    if (n < 3)
        return;
    if (exists_pow_neg1(n, R.q()))
        ensure(ord_mod(n, R.q()) % 2 == 0, errc::invariant_breach,
               "q^s = -1 mod n with odd order at q = " + std::to_string(R.q()) + ", n = " + std::to_string(n));
}

inline void check_witness(const Code& c)
{
    ensure(is_self_dual(c), errc::invariant_breach, "witness is not self-dual");
    const BigInt whole = big_pow(c.ring().size(), c.n());
    ensure(c.cardinality() * c.cardinality() == whole, errc::invariant_breach, "witness has the wrong size");
}

}  // namespace detail

inline CensusRow census_row(const AnyRing& ring, u64 n, bool construct)
{
    CensusRow row;
    row.ring = ring_name(ring);
    row.n = n;
    ExistenceVerdict v;
    if (auto c = std::get_if<RingRef>(&ring)) {
        v = self_dual_verdict(**c, n);
        if (auto sc = sufficient_conditions(**c, n))
            row.shortcut = sc->rule;
    } else {
        v = self_dual_verdict(*std::get<PirRef>(ring), n);
    }
    row.status = v.status;
    row.decided_by = v.decided_by;
    row.blocking_power = v.blocking_power;
    for (const auto& c : ring_components(ring)) {
        detail::check_order_lemma(*c, n);
        if (n >= 2)
            row.ords.push_back(ord_mod(n, c->q()));
    }
    if (construct && v.status == Status::nontrivial_exists) {
        if (auto c = std::get_if<RingRef>(&ring)) {
            Code w = construct_self_dual(*c, n);
            detail::check_witness(w);
            row.witness = "levels=" + detail::levels_text(w.levels());
            row.witness_cardinality = w.cardinality().str();
        } else {
            ProductCode w = construct_self_dual(std::get<PirRef>(ring), n);
            std::string s;
            for (const auto& c : w.components()) {
                detail::check_witness(c);
                s += (s.empty() ? "levels=" : "x") + detail::levels_text(c.levels());
            }
            row.witness = s;
            row.witness_cardinality = w.cardinality().str();
        }
    }
    ensure(v.status != Status::none || row.witness.empty(), errc::invariant_breach, "NONE row carries a witness");
    return row;
}

/// One row per (ring, n) with n coprime to every residue characteristic, in
/// ring-major order. Rows are computed on a thread pool; order never depends
/// on scheduling.
inline std::vector<CensusRow> run_census(const std::vector<AnyRing>& rings, const std::vector<u64>& ns, bool construct,
                                         unsigned threads = 0)
{
    std::vector<std::pair<const AnyRing*, u64>> jobs;
    for (const auto& R : rings)
        for (u64 n : ns) {
            bool ok = true;
            for (const auto& c : ring_components(R))
                ok = ok && std::gcd(n, c->p()) == 1;
            if (ok)
                jobs.emplace_back(&R, n);
        }
    ensure(jobs.size() <= max_census_rows, errc::grid_too_large,
           std::to_string(jobs.size()) + " rows exceed the limit of " + std::to_string(max_census_rows));

    std::vector<std::optional<CensusRow>> rows(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            try {
                rows[i] = census_row(*jobs[i].first, jobs[i].second, construct);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<CensusRow> out;
    for (auto& r : rows)
        out.push_back(std::move(*r));
    return out;
}

inline std::vector<CensusRow> run_census(const GridSpec& g, bool construct, unsigned threads = 0)
{
    std::size_t bound = 0;
    for (u64 p : g.p) {
        if (!is_prime(p))
            continue;
        const auto coprime = static_cast<std::size_t>(
            std::count_if(g.n.begin(), g.n.end(), [p](u64 n) { return std::gcd(n, p) == 1; }));
        bound += coprime * g.r.size() * g.e.size() * g.families.size();
    }
    ensure(bound <= max_census_rows, errc::grid_too_large,
           "grid has up to " + std::to_string(bound) + " rows, limit is " + std::to_string(max_census_rows));
    std::vector<AnyRing> rings;
    for (auto& R : grid_rings(g))
        rings.emplace_back(std::move(R));
    return run_census(rings, g.n, construct, threads);
}

// ---------------------------------------------------------------------------
// Oracle against theory.

struct OracleMatch {
    OracleReport report;
    /// Level map of each oracle code, in report order.
    std::vector<std::vector<unsigned>> levels;
    std::vector<std::vector<unsigned>> self_dual_levels;
    std::size_t predicted = 0;
};

/// Runs the brute-force enumeration and pairs every oracle code with the
/// level map whose code has the same element set. Throws InvariantBreach on
/// any mismatch in count, size or self-duality.
inline OracleMatch oracle_match(const RingRef& R, std::size_t n, Elt lambda, u64 bound = oracle_full_bound)
{
    auto fac = factor_xn_minus_lambda(R, n, lambda);
    OracleMatch m;
    m.report = oracle_enumerate(*R, n, lambda, bound);
    m.predicted = 1;
    for (std::size_t i = 0; i < fac.factors.size(); ++i)
        m.predicted *= R->e() + 1;
    ensure(m.report.count() == m.predicted, errc::invariant_breach,
           "oracle found " + std::to_string(m.report.count()) + " codes, structure theorem predicts " +
               std::to_string(m.predicted));

    VectorIndexer<ChainRing> V(*R, n, bound);
    std::map<std::vector<u64>, std::size_t> by_members;
    for (std::size_t i = 0; i < m.report.codes.size(); ++i)
        by_members.emplace(m.report.codes[i].members, i);
    m.levels.assign(m.report.codes.size(), {});
    std::vector<char> hit(m.report.codes.size(), 0);
    for (auto& spec : all_specs(fac)) {
        Code c = build_code(spec);
        std::vector<u64> members;
        for (u64 a = 0; a < V.count(); ++a)
            if (membership(V.vec(a), c))
                members.push_back(a);
        ensure(BigInt(members.size()) == c.cardinality(), errc::invariant_breach,
               "formula size differs from the element count for levels " + detail::levels_text(c.levels()));
        auto it = by_members.find(members);
        ensure(it != by_members.end() && !hit[it->second], errc::invariant_breach,
               "level map " + detail::levels_text(c.levels()) + " has no oracle partner");
        hit[it->second] = 1;
        m.levels[it->second] = c.levels();
        const bool sd = is_self_dual(c);
        ensure(sd == m.report.codes[it->second].self_dual, errc::invariant_breach,
               "self-duality disagrees with the oracle for levels " + detail::levels_text(c.levels()));
        if (sd)
            m.self_dual_levels.push_back(c.levels());
    }
    std::sort(m.self_dual_levels.begin(), m.self_dual_levels.end());
    return m;
}

}  // namespace pirc

#endif
