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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pirc/pirc.hpp"

using namespace pirc;

namespace {

struct Options {
    std::string ring;
    std::size_t n = 0;
    std::string lambda = "1";
    std::string delta;
    std::string grid;
    std::string levels;
    std::vector<std::string> files;
    bool construct = false;
    bool json_out = false;
    bool table_out = false;
    unsigned threads = 0;
    u64 seed = 0;
};

class Table {
public:
    explicit Table(std::vector<std::string> head) { rows_.push_back(std::move(head)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& os) const
    {
        std::vector<std::size_t> w(rows_[0].size(), 0);
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i)
                w[i] = std::max(w[i], r[i].size());
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size())
                    line += std::string(w[i] - r[i].size() + 2, ' ');
            }
            os << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<u64>& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

json read_json(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        ensure(in.good(), errc::invalid_argument, "cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(errc::malformed_descriptor, e.what());
    }
}

bool is_product(const json& j) { return j.is_object() && j.contains("components"); }

std::vector<unsigned> parse_levels(const std::string& s)
{
    std::vector<unsigned> out;
    for (auto part : detail::split(s, ','))
        out.push_back(static_cast<unsigned>(detail::parse_u64(detail::trim(part))));
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_factor(const Options& o)
{
    RingRef R = parse_ring(o.ring);
    auto fac = factor_xn_minus_lambda(R, o.n, parse_element(*R, o.lambda));
    if (o.json_out) {
        emit(factorization_json(fac));
        return 0;
    }
    std::cout << "x^" << o.n << " - (" << R->to_string(fac.lambda) << ") over " << R->name() << '\n';
    Table t({"#", "deg", "factor"});
    for (std::size_t i = 0; i < fac.factors.size(); ++i)
        t.add({std::to_string(i), std::to_string(fac.factors[i].degree()), fac.factors[i].to_string("x")});
    t.print(std::cout);
    return 0;
}

int cmd_construct(const Options& o)
{
    AnyRing any = parse_any_ring(o.ring);
    if (auto R = std::get_if<RingRef>(&any)) {
        if (o.levels.empty()) {
            emit(code_json(construct_self_dual(*R, o.n)));
        } else {
            auto fac = factor_xn_minus_lambda(*R, o.n, parse_element(**R, o.lambda));
            emit(code_json(build_code(fac, parse_levels(o.levels))));
        }
        return 0;
    }
    const PirRef& P = std::get<PirRef>(any);
    if (o.levels.empty()) {
        emit(product_json(construct_self_dual(P, o.n)));
        return 0;
    }
    // levels per component separated by '/'
    auto groups = detail::split(o.levels, '/');
    ensure(groups.size() == P->arity(), errc::arity_mismatch, "one level list per component, separated by '/'");
    auto lam = P->unit_decompose(parse_element(*P, o.lambda));
    std::vector<Code> parts;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        auto fac = factor_xn_minus_lambda(P->component_ref(i), o.n, lam[i]);
        parts.push_back(build_code(fac, parse_levels(std::string(groups[i]))));
    }
    emit(product_json(ProductCode(P, std::move(parts))));
    return 0;
}

Code dual_of(const Code& c) { return is_plus_minus_one(c.ring(), c.lambda()) ? dual(c) : dual_constacyclic(c); }

int cmd_dual(const Options& o)
{
    ensure(o.files.size() == 1, errc::invalid_argument, "dual takes one descriptor");
    json j = read_json(o.files[0]);
    if (is_product(j))
        emit(product_json(product_dual(product_from_json(j))));
    else
        emit(code_json(dual_of(code_from_json(j))));
    return 0;
}

int cmd_check(const Options& o)
{
    ensure(o.files.size() == 1, errc::invalid_argument, "check takes one descriptor");
    json j = read_json(o.files[0]);
    auto diffs = is_product(j) ? check_product_descriptor(j) : check_descriptor(j);
    if (o.json_out) {
        json out = json::array();
        for (const auto& d : diffs)
            out.push_back({{"field", d.field}, {"claimed", d.claimed}, {"derived", d.derived}});
        emit(out);
    } else if (diffs.empty()) {
        std::cout << "ok\n";
    } else {
        for (const auto& d : diffs)
            std::cout << d.field << ": descriptor says " << d.claimed << ", derived " << d.derived << '\n';
    }
    return diffs.empty() ? 0 : 3;
}

void print_rows(const std::vector<CensusRow>& rows, bool as_json)
{
    if (as_json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back(row_json(r));
        emit(out);
        return;
    }
    Table t({"ring", "n", "status", "rule", "ord", "i", "witness", "|C|"});
    for (const auto& r : rows)
        t.add({r.ring, std::to_string(r.n), std::string(status_name(r.status)), r.decided_by, join(r.ords),
               r.blocking_power ? std::to_string(*r.blocking_power) : "-", r.witness.empty() ? "-" : r.witness,
               r.witness_cardinality.empty() ? "-" : r.witness_cardinality});
    t.print(std::cout);
}

int cmd_verdict(const Options& o)
{
    print_rows({census_row(parse_any_ring(o.ring), o.n, o.construct)}, o.json_out);
    return 0;
}

int cmd_census(const Options& o)
{
    GridSpec g = parse_grid(o.grid);
    std::vector<CensusRow> rows;
    if (!o.ring.empty())
        rows = run_census(std::vector<AnyRing>{parse_any_ring(o.ring)}, g.n, o.construct, o.threads);
    else
        rows = run_census(g, o.construct, o.threads);
    print_rows(rows, o.json_out);
    return 0;
}

std::string levels_text(const std::vector<unsigned>& lv)
{
    std::vector<u64> v(lv.begin(), lv.end());
    return "[" + join(v) + "]";
}

int cmd_oracle(const Options& o)
{
    AnyRing any = parse_any_ring(o.ring);
    if (auto R = std::get_if<RingRef>(&any)) {
        auto m = oracle_match(*R, o.n, parse_element(**R, o.lambda));
        if (o.json_out) {
            emit(oracle_json(m.report, &m.self_dual_levels));
            return 0;
        }
        std::cout << m.report.ring << ", n = " << m.report.n << ", lambda = " << m.report.lambda << '\n'
                  << "codes: " << m.report.count() << " (predicted " << m.predicted << ")\n"
                  << "self-dual: " << m.report.self_dual_count() << '\n';
        for (const auto& lv : m.self_dual_levels)
            std::cout << "  levels " << levels_text(lv) << '\n';
        return 0;
    }
    const PirRef& P = std::get<PirRef>(any);
    auto rep = oracle_enumerate(*P, o.n, parse_element(*P, o.lambda));
    if (o.json_out) {
        emit(oracle_json(rep));
        return 0;
    }
    std::cout << rep.ring << ", n = " << rep.n << ", lambda = " << rep.lambda << '\n'
              << "codes: " << rep.count() << '\n'
              << "self-dual: " << rep.self_dual_count() << '\n';
    return 0;
}

int cmd_mu(const Options& o)
{
    ensure(!o.delta.empty(), errc::invalid_argument, "mu needs --delta");
    ensure(o.files.size() == 1, errc::invalid_argument, "mu takes one cyclic code descriptor");
    json j = read_json(o.files[0]);
    if (is_product(j)) {
        ProductCode pc = product_from_json(j);
        Elt d = parse_element(pc.ring(), o.delta);
        emit(product_json(pir_mu(pc, d, pc.ring().pow(d, pc.n()))));
        return 0;
    }
    Code c = code_from_json(j);
    Elt d = parse_element(c.ring(), o.delta);
    emit(code_json(mu_map(c, d, c.ring().pow(d, c.n()))));
    return 0;
}

int cmd_crt(const Options& o)
{
    AnyRing any = parse_any_ring(o.ring);
    auto P = std::get_if<PirRef>(&any);
    ensure(P != nullptr, errc::invalid_argument, "crt needs a product ring");
    ensure(o.files.size() == (*P)->arity(), errc::arity_mismatch, "one component descriptor per component ring");
    std::vector<Code> parts;
    for (const auto& f : o.files)
        parts.push_back(code_from_json(read_json(f)));
    ProductCode pc = chinese_product_code(*P, std::move(parts));
    json j = product_json(pc);
    j["lambda_text"] = pc.ring().to_string(pc.lambda());
    if ((*P)->is_rvr()) {
        auto g = rvr_generators(pc);
        j["generator"] = json::array();
        for (Elt c : g.f)
            j["generator"].push_back(pc.ring().to_string(c));
    }
    emit(j);
    return 0;
}

int exit_code(errc c)
{
    switch (c) {
    case errc::malformed_descriptor:
    case errc::malformed_input: return 3;
    case errc::invariant_breach: return 4;
    default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Constacyclic codes over finite chain rings and their products"};
    app.require_subcommand(1);
    Options o;

    auto ring = [&](CLI::App* s, bool required = true) {
        auto opt = s->add_option("--ring", o.ring, "ring, e.g. Z/4, GR(4,3), F9[u]/u^2, Z/4 x F3, F3 + vF3");
        if (required)
            opt->required();
    };
    auto format = [&](CLI::App* s) {
        s->add_flag("--json", o.json_out, "JSON output");
        s->add_flag("--table", o.table_out, "aligned table output (default)");
        s->add_option("--seed", o.seed, "accepted for compatibility; every algorithm is deterministic");
    };

    auto* factor = app.add_subcommand("factor", "factor x^n - lambda into basic irreducibles");
    ring(factor);
    factor->add_option("--n", o.n, "length")->required();
    factor->add_option("--lambda", o.lambda, "unit lambda (default 1)");
    format(factor);

    auto* construct = app.add_subcommand("construct", "code descriptor from levels, or a self-dual witness");
    ring(construct);
    construct->add_option("--n", o.n, "length")->required();
    construct->add_option("--lambda", o.lambda, "unit lambda (default 1)");
    construct->add_option("--levels", o.levels, "one level per factor, e.g. 0,2,1; products use 0,1/1,0");
    format(construct);

    auto* dualc = app.add_subcommand("dual", "dual of a code descriptor");
    dualc->add_option("descriptor", o.files, "JSON file, or - for stdin")->required();
    format(dualc);

    auto* check = app.add_subcommand("check", "re-derive a descriptor and report differences");
    check->add_option("descriptor", o.files, "JSON file, or - for stdin")->required();
    format(check);

    auto* verdict = app.add_subcommand("verdict", "existence of nontrivial cyclic self-dual codes");
    ring(verdict);
    verdict->add_option("--n", o.n, "length")->required();
    verdict->add_flag("--construct", o.construct, "build and verify a witness");
    format(verdict);

    auto* census = app.add_subcommand("census", "verdicts over a parameter grid");
    ring(census, false);
    census->add_option("--grid", o.grid, "e.g. \"p=2,3;r=1;e=1..4;n=1..15;family=gr,fqu\"")->required();
    census->add_flag("--construct", o.construct, "build and verify witnesses");
    census->add_option("--threads", o.threads, "worker threads (default: all cores)");
    format(census);

    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration of all constacyclic codes");
    ring(oracle);
    oracle->add_option("--n", o.n, "length")->required();
    oracle->add_option("--lambda", o.lambda, "unit lambda (default 1)");
    format(oracle);

    auto* mu = app.add_subcommand("mu", "map a cyclic code to a delta^n-constacyclic code");
    mu->add_option("descriptor", o.files, "JSON file, or - for stdin")->required();
    mu->add_option("--delta", o.delta, "unit delta")->required();
    format(mu);

    auto* crt = app.add_subcommand("crt", "glue component codes into a code over a product ring");
    ring(crt);
    crt->add_option("descriptors", o.files, "one JSON file per component")->required();
    format(crt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "factor")
            return cmd_factor(o);
        if (name == "construct")
            return cmd_construct(o);
        if (name == "dual")
            return cmd_dual(o);
        if (name == "check")
            return cmd_check(o);
        if (name == "verdict")
            return cmd_verdict(o);
        if (name == "census")
            return cmd_census(o);
        if (name == "oracle")
            return cmd_oracle(o);
        if (name == "mu")
            return cmd_mu(o);
        return cmd_crt(o);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.code());
    }
}
