#ifndef LYZVAL_JSON_IO_HPP
#define LYZVAL_JSON_IO_HPP

// JSON wire formats.
//
// Scalars: exact mode reads integer literals and "p/q" strings and always
// writes strings; float mode reads numbers as well and writes numbers.
// Polytopes: {"dim": n, "vertices": [[...], ...]}. Matrices: row-major
// arrays of arrays. Valuation specs: {"family": "theorem2" | "theorem4" |
// "theorem5", ...} with per-family coefficient fields. Check reports
// serialize with a fixed field order so runs are byte-for-byte comparable.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "lyzval/errors.hpp"
#include "lyzval/harness.hpp"
#include "lyzval/linalg.hpp"
#include "lyzval/polytope.hpp"
#include "lyzval/rational.hpp"
#include "lyzval/valuations.hpp"

namespace lyzval {

using json = nlohmann::ordered_json;

template <typename S>
json scalar_to_json(const S& x) {
    if constexpr (scalar_traits<S>::exact)
        return to_string(x);
    else
        return x;
}

template <typename S>
S scalar_from_json(const json& j, const std::string& where) {
    if (j.is_string())
        return scalar_traits<S>::parse(j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned())
        return scalar_traits<S>::from_rational(Rat(j.get<long long>()));
    if (j.is_number_float()) {
        if constexpr (scalar_traits<S>::exact)
            throw ParseError(where + ": exact mode accepts integers and \"p/q\" strings, not " +
                             j.dump());
        else
            return j.get<double>();
    }
    throw ParseError(where + ": expected a number or a \"p/q\" string, got " + j.dump());
}

template <typename S>
json vec_to_json(const Vec<S>& v) {
    json a = json::array();
    for (int i = 0; i < v.dim(); ++i) a.push_back(scalar_to_json(v[i]));
    return a;
}

template <typename S>
json matrix_to_json(const Mat<S>& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename S>
json polytope_to_json(const Polytope<S>& p) {
    json out;
    out["dim"] = p.ambient_dim();
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(vec_to_json(v));
    out["vertices"] = std::move(verts);
    return out;
}

template <typename S>
Polytope<S> parse_polytope(const json& j) {
    if (!j.is_object())
        throw ParseError("polytope: expected a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("polytope: missing integer field \"dim\"");
    int dim = j["dim"].get<int>();
    if (dim < 1 || dim > 16)
        throw ParseError("polytope: \"dim\" out of range");
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw ParseError("polytope: missing nonempty array field \"vertices\"");
    std::vector<Vec<S>> pts;
    pts.reserve(j["vertices"].size());
    int row = 0;
    for (const auto& jv : j["vertices"]) {
        if (!jv.is_array())
            throw ParseError("polytope: vertex " + std::to_string(row) + " is not an array");
        if (static_cast<int>(jv.size()) != dim)
            throw DimensionMismatch("polytope: vertex " + std::to_string(row) + " has length " +
                                    std::to_string(jv.size()) + ", expected " + std::to_string(dim));
        Vec<S> v(dim);
        for (int i = 0; i < dim; ++i)
            v[i] = scalar_from_json<S>(jv[static_cast<std::size_t>(i)],
                                       "vertex " + std::to_string(row) + "[" + std::to_string(i) + "]");
        pts.push_back(std::move(v));
        ++row;
    }
    return Polytope<S>(dim, std::move(pts));
}

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

template <typename S>
Polytope<S> parse_polytope_text(const std::string& text) {
    return parse_polytope<S>(parse_json_text(text));
}

namespace detail {

template <typename S>
CauchyWitness<S> witness_from_json(const json& j, const std::string& field) {
    if (!j.contains(field))
        throw ParseError("valuation spec: missing witness field \"" + field + "\"");
    return CauchyWitness<S>::linear(scalar_from_json<S>(j[field], field));
}

template <typename S>
S coef_from_json(const json& j, const std::string& field) {
    if (!j.contains(field))
        throw ParseError("valuation spec: missing coefficient field \"" + field + "\"");
    return scalar_from_json<S>(j[field], field);
}

} // namespace detail

// {"family":"theorem2","c":...,"xi":...}, {"family":"theorem4","zeta1":...,
// "zeta2":...}, {"family":"theorem5","c1":...,"c2":...,"xi1":...,"xi2":...}.
// Witness fields are the slopes of linear witnesses.
template <typename S>
ValuationSpec<S> parse_valuation_spec(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw ParseError("valuation spec: expected an object with a \"family\" string");
    const std::string family = j["family"].get<std::string>();
    if (family == "theorem2")
        return Theorem2Params<S>{detail::coef_from_json<S>(j, "c"),
                                 detail::witness_from_json<S>(j, "xi")};
    if (family == "theorem4")
        return Theorem4Params<S>{detail::witness_from_json<S>(j, "zeta1"),
                                 detail::witness_from_json<S>(j, "zeta2")};
    if (family == "theorem5")
        return Theorem5Params<S>{detail::coef_from_json<S>(j, "c1"),
                                 detail::coef_from_json<S>(j, "c2"),
                                 detail::witness_from_json<S>(j, "xi1"),
                                 detail::witness_from_json<S>(j, "xi2")};
    throw ParseError("valuation spec: unknown family \"" + family +
                     "\" (expected theorem2, theorem4 or theorem5)");
}

inline json report_to_json(const harness::CheckReport& r) {
    json out;
    out["check"] = r.check;
    out["dim"] = r.dim;
    out["seed"] = r.seed;
    out["trials"] = r.trials;
    out["status"] = r.pass() ? "pass" : "fail";
    out["failures_total"] = r.failures_total;
    json fails = json::array();
    for (const auto& f : r.failures) {
        json jf;
        jf["trial"] = f.trial;
        jf["detail"] = f.detail;
        fails.push_back(std::move(jf));
    }
    out["failures"] = std::move(fails);
    return out;
}

} // namespace lyzval

#endif
