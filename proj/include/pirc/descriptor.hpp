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

// JSON forms. A code descriptor is
//   {"ring": "Z/4", "n": 7, "lambda": [1], "factors": [[3,1], ...],
//    "levels": [0,2,1], "cardinality": "128", "self_dual": true}
// Coefficients with a single coordinate are plain integers, others are
// coordinate lists; lambda is always a coordinate list. Cardinalities are
// decimal strings.

#ifndef PIRC_DESCRIPTOR_HPP
#define PIRC_DESCRIPTOR_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "census.hpp"
#include "text.hpp"

namespace pirc {

using json = nlohmann::ordered_json;

inline json element_json(const ChainRing& R, Elt x)
{
    auto c = R.coords(x);
    if (c.size() == 1)
        return c.front();
    return json(c);
}

inline json coord_list(const ChainRing& R, Elt x) { return json(R.coords(x)); }

inline json poly_json(const Poly& f)
{
    json a = json::array();
    for (Elt c : f.coeffs())
        a.push_back(element_json(f.ring(), c));
    return a;
}

namespace detail {

[[noreturn]] inline void bad_descriptor(const std::string& what)
{
    fail(errc::malformed_descriptor, what);
}

inline const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        bad_descriptor(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline Elt element_from_json(const ChainRing& R, const json& j)
{
    std::vector<u64> co;
    if (j.is_number_unsigned()) {
        if (R.coord_count() != 1)
            bad_descriptor(R.name() + " elements need " + std::to_string(R.coord_count()) + " coordinates");
        co.push_back(j.get<u64>());
    } else if (j.is_array()) {
        for (const auto& c : j) {
            if (!c.is_number_unsigned())
                bad_descriptor("coordinates must be non-negative integers");
            co.push_back(c.get<u64>());
        }
    } else {
        bad_descriptor("element must be an integer or a coordinate list");
    }
    if (co.size() != R.coord_count())
        bad_descriptor(R.name() + " elements need " + std::to_string(R.coord_count()) + " coordinates");
    for (u64 c : co)
        if (c >= R.coord_radix())
            bad_descriptor("coordinate out of range");
    return R.from_coords(co);
}

inline Poly poly_from_json(const RingRef& R, const json& j)
{
    if (!j.is_array())
        bad_descriptor("polynomial must be a coefficient list");
    std::vector<Elt> c;
    for (const auto& x : j)
        c.push_back(element_from_json(*R, x));
    return Poly(R, std::move(c));
}

inline std::size_t length_from_json(const json& j)
{
    const json& n = field(j, "n");
    if (!n.is_number_unsigned() || n.get<u64>() == 0)
        bad_descriptor("n must be a positive integer");
    return n.get<std::size_t>();
}

template <class F>
auto guarded(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const json::exception& e) {
        bad_descriptor(e.what());
    } catch (const error& e) {
        if (e.code() == errc::malformed_input)
            bad_descriptor(e.what());
        throw;
    }
}

}  // namespace detail

inline json factorization_json(const Factorization& fac)
{
    const ChainRing& R = *fac.ring();
    json j;
    j["ring"] = R.name();
    j["n"] = fac.n;
    j["lambda"] = coord_list(R, fac.lambda);
    j["factors"] = json::array();
    for (const auto& f : fac.factors)
        j["factors"].push_back(poly_json(f));
    j["degrees"] = json::array();
    for (const auto& f : fac.factors)
        j["degrees"].push_back(f.degree());
    return j;
}

inline json code_json(const Code& c)
{
    json j;
    j["ring"] = c.ring().name();
    j["n"] = c.n();
    j["lambda"] = coord_list(c.ring(), c.lambda());
    j["factors"] = json::array();
    for (const auto& f : c.factors())
        j["factors"].push_back(poly_json(f));
    j["levels"] = c.levels();
    j["cardinality"] = c.cardinality().str();
    j["self_dual"] = is_self_dual(c);
    return j;
}

/// Rebuilds a code from its descriptor. Factors may be listed in any order
/// but must be exactly the monic basic irreducible factors of x^n - lambda.
inline Code code_from_json(const json& j)
{
    return detail::guarded([&] {
        const json& rs = detail::field(j, "ring");
        if (!rs.is_string())
            detail::bad_descriptor("ring must be a string");
        RingRef R = parse_ring(rs.get<std::string>());
        const std::size_t n = detail::length_from_json(j);
        Elt lambda = detail::element_from_json(*R, detail::field(j, "lambda"));
        auto fac = factor_xn_minus_lambda(R, n, lambda);

        const json& lv = detail::field(j, "levels");
        if (!lv.is_array())
            detail::bad_descriptor("levels must be a list");
        std::vector<unsigned> given;
        for (const auto& t : lv) {
            if (!t.is_number_unsigned() || t.get<u64>() > R->e())
                detail::bad_descriptor("levels must be integers in 0.." + std::to_string(R->e()));
            given.push_back(t.get<unsigned>());
        }
        if (given.size() != fac.factors.size())
            detail::bad_descriptor("expected " + std::to_string(fac.factors.size()) + " levels, got " +
                                   std::to_string(given.size()));
        std::vector<unsigned> levels = given;
        if (j.contains("factors")) {
            const json& fs = j.at("factors");
            if (!fs.is_array() || fs.size() != fac.factors.size())
                detail::bad_descriptor("factor list does not match x^n - lambda");
            std::vector<char> used(fac.factors.size(), 0);
            for (std::size_t i = 0; i < fs.size(); ++i) {
                Poly f = detail::poly_from_json(R, fs[i]);
                std::size_t k = 0;
                while (k < fac.factors.size() && !(fac.factors[k] == f))
                    ++k;
                if (k == fac.factors.size() || used[k])
                    detail::bad_descriptor("'" + f.to_string("x") + "' is not a distinct factor of x^n - lambda");
                used[k] = 1;
                levels[k] = given[i];
            }
        }
        return build_code(fac, levels);
    });
}

struct FieldDiff {
    std::string field;
    std::string claimed;
    std::string derived;
};

/// Fields of the descriptor that disagree with what the code actually is.
inline std::vector<FieldDiff> check_descriptor(const json& j)
{
    Code c = code_from_json(j);
    json d = code_json(c);
    std::vector<FieldDiff> out;
    for (const char* key : {"cardinality", "self_dual"}) {
        if (j.contains(key) && j.at(key) != d.at(key))
            out.push_back({key, j.at(key).dump(), d.at(key).dump()});
    }
    if (j.contains("dual")) {
        json dd = code_json(is_plus_minus_one(c.ring(), c.lambda()) ? dual(c) : dual_constacyclic(c));
        Code claimed = code_from_json(j.at("dual"));
        if (!(claimed == code_from_json(dd)))
            out.push_back({"dual", j.at("dual").dump(), dd.dump()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Products.

inline json product_json(const ProductCode& pc)
{
    json j;
    j["ring"] = pc.ring().name();
    j["n"] = pc.n();
    j["lambda"] = json::array();
    for (const auto& c : pc.components())
        j["lambda"].push_back(coord_list(c.ring(), c.lambda()));
    j["components"] = json::array();
    for (const auto& c : pc.components())
        j["components"].push_back(code_json(c));
    j["cardinality"] = pc.cardinality().str();
    j["self_dual"] = product_self_dual(pc);
    return j;
}

inline ProductCode product_from_json(const json& j)
{
    return detail::guarded([&] {
        const json& rs = detail::field(j, "ring");
        if (!rs.is_string())
            detail::bad_descriptor("ring must be a string");
        AnyRing any = parse_any_ring(rs.get<std::string>());
        auto pir = std::get_if<PirRef>(&any);
        if (!pir)
            detail::bad_descriptor("product descriptor over a chain ring");
        const json& cs = detail::field(j, "components");
        if (!cs.is_array() || cs.size() != (*pir)->arity())
            detail::bad_descriptor("one component descriptor per component ring");
        std::vector<Code> parts;
        for (const auto& c : cs)
            parts.push_back(code_from_json(c));
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!parts[i].ring().same_as((*pir)->component(i)))
                detail::bad_descriptor("component " + std::to_string(i) + " is over " + parts[i].ring().name());
        return ProductCode(*pir, std::move(parts));
    });
}

inline std::vector<FieldDiff> check_product_descriptor(const json& j)
{
    ProductCode pc = product_from_json(j);
    json d = product_json(pc);
    std::vector<FieldDiff> out;
    for (const char* key : {"cardinality", "self_dual"})
        if (j.contains(key) && j.at(key) != d.at(key))
            out.push_back({key, j.at(key).dump(), d.at(key).dump()});
    for (std::size_t i = 0; i < pc.components().size(); ++i)
        for (auto& f : check_descriptor(j.at("components")[i]))
            out.push_back({"components[" + std::to_string(i) + "]." + f.field, f.claimed, f.derived});
    return out;
}

// ---------------------------------------------------------------------------
// Reports.

inline json row_json(const CensusRow& r)
{
    json j;
    j["ring"] = r.ring;
    j["n"] = r.n;
    j["status"] = std::string(status_name(r.status));
    j["decided_by"] = r.decided_by;
    j["ords"] = r.ords;
    j["blocking_power"] = r.blocking_power ? json(*r.blocking_power) : json(nullptr);
    j["shortcut"] = r.shortcut.empty() ? json(nullptr) : json(r.shortcut);
    j["witness"] = r.witness.empty() ? json(nullptr) : json(r.witness);
    j["witness_cardinality"] = r.witness_cardinality.empty() ? json(nullptr) : json(r.witness_cardinality);
    return j;
}

inline json oracle_json(const OracleReport& rep, const std::vector<std::vector<unsigned>>* self_dual_levels = nullptr)
{
    json j;
    j["ring"] = rep.ring;
    j["n"] = rep.n;
    j["lambda"] = rep.lambda;
    j["codes"] = rep.count();
    j["self_dual"] = rep.self_dual_count();
    if (self_dual_levels)
        j["self_dual_levels"] = *self_dual_levels;
    j["pairs_suffice"] = rep.triple_stable;
    return j;
}

}  // namespace pirc

#endif
