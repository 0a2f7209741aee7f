// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV serialization. Rationals survive a round trip exactly:
// integers travel as JSON numbers, everything else as strings holding either
// a terminating decimal or "p/q"; floating-point inputs are recovered through
// their shortest decimal representation.

#pragma once

#include <cstdint>
#include <fstream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fdx/cases.hpp"
#include "fdx/errors.hpp"
#include "fdx/interval_set.hpp"
#include "fdx/oracle.hpp"
#include "fdx/rational.hpp"
#include "fdx/region.hpp"
#include "fdx/scenario.hpp"

namespace fdx {

using json = nlohmann::json;

inline json rational_to_json(const Rational& x) {
    if (x.is_integer())
        return json(x.num());
    return json(x.to_decimal_string());
}

/// Accepts a JSON number (integer or float) or a string ("0.25", "1/3").
/// Floats are read back through their shortest decimal form, so any value
/// that printed as, say, 0.1 becomes exactly 1/10.
inline Rational rational_from_json(const json& j, const std::string& field) {
    try {
        // Unsigned first: is_number_integer() is also true for unsigned
        // storage, and get<int64_t> would wrap out-of-range values silently.
        if (j.is_number_unsigned()) {
            const std::uint64_t u = j.get<std::uint64_t>();
            if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
                throw OverflowError("number overflows 64 bits");
            return Rational(static_cast<std::int64_t>(u));
        }
        if (j.is_number_integer())
            return Rational(j.get<std::int64_t>());
        if (j.is_number_float())
            return Rational::parse(j.dump());
        if (j.is_string())
            return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        throw ParseError("field '" + field + "': " + e.what());
    }
    throw ParseError("field '" + field + "' must be a number or a rational string");
}

inline json interval_set_to_json(const IntervalSet& set) {
    json pairs = json::array();
    for (const Interval& piece : set.pieces())
        pairs.push_back(json::array({rational_to_json(piece.lo), rational_to_json(piece.hi)}));
    return pairs;
}

/// Parses [[lo, hi], ...] and normalizes; endpoint violations keep their
/// error type but gain the field name.
inline IntervalSet interval_set_from_json(const json& j, const std::string& field) {
    if (!j.is_array())
        throw ParseError("field '" + field + "' must be an array of [lo, hi] pairs");
    std::vector<Interval> raw;
    for (const json& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("field '" + field + "' entries must be [lo, hi] pairs");
        raw.push_back(Interval{rational_from_json(pair[0], field + " lo"),
                               rational_from_json(pair[1], field + " hi")});
    }
    try {
        return IntervalSet::normalize(std::move(raw));
    } catch (const OutOfRange& e) {
        throw OutOfRange("field '" + field + "': " + e.what());
    } catch (const MalformedPair& e) {
        throw MalformedPair("field '" + field + "': " + e.what());
    }
}

inline json scenario_to_json(const Scenario& s) {
    json j;
    j["l_t1"] = rational_to_json(s.l_t1);
    j["l_t2"] = rational_to_json(s.l_t2);
    j["l_r1"] = rational_to_json(s.l_r1);
    j["l_r2"] = rational_to_json(s.l_r2);
    j["psi_t11"] = interval_set_to_json(s.psi_t11);
    j["psi_t21"] = interval_set_to_json(s.psi_t21);
    j["psi_t22"] = interval_set_to_json(s.psi_t22);
    j["psi_t12"] = interval_set_to_json(s.psi_t12);
    j["psi_r11"] = interval_set_to_json(s.psi_r11);
    j["psi_r12"] = interval_set_to_json(s.psi_r12);
    j["psi_r22"] = interval_set_to_json(s.psi_r22);
    j["psi_r21"] = interval_set_to_json(s.psi_r21);
    j["label"] = s.label;
    return j;
}

inline Scenario scenario_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("scenario document must be a JSON object");
    const auto get = [&j](const char* field) -> const json& {
        const auto it = j.find(field);
        if (it == j.end())
            throw ParseError(std::string("missing field '") + field + "'");
        return *it;
    };
    Scenario s;
    s.l_t1 = rational_from_json(get("l_t1"), "l_t1");
    s.l_t2 = rational_from_json(get("l_t2"), "l_t2");
    s.l_r1 = rational_from_json(get("l_r1"), "l_r1");
    s.l_r2 = rational_from_json(get("l_r2"), "l_r2");
    s.psi_t11 = interval_set_from_json(get("psi_t11"), "psi_t11");
    s.psi_t21 = interval_set_from_json(get("psi_t21"), "psi_t21");
    s.psi_t22 = interval_set_from_json(get("psi_t22"), "psi_t22");
    s.psi_t12 = interval_set_from_json(get("psi_t12"), "psi_t12");
    s.psi_r11 = interval_set_from_json(get("psi_r11"), "psi_r11");
    s.psi_r12 = interval_set_from_json(get("psi_r12"), "psi_r12");
    s.psi_r22 = interval_set_from_json(get("psi_r22"), "psi_r22");
    s.psi_r21 = interval_set_from_json(get("psi_r21"), "psi_r21");
    if (const auto it = j.find("label"); it != j.end()) {
        if (!it->is_string())
            throw ParseError("field 'label' must be a string");
        s.label = it->get<std::string>();
    }
    return s;
}

inline Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open scenario file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return scenario_from_json(j);
}

inline json point_to_json(const Point& p) {
    return json::array({rational_to_json(p.d1), rational_to_json(p.d2)});
}

inline json vertices_to_json(const DofRegion& r) {
    json out = json::array();
    for (const Point& v : r.vertices())
        out.push_back(point_to_json(v));
    return out;
}

inline json bounds_to_json(const FdBounds& b) {
    json j;
    j["d1_max"] = rational_to_json(b.d1_max);
    j["d2_max"] = rational_to_json(b.d2_max);
    j["d_sum_max"] = rational_to_json(b.d_sum_max);
    return j;
}

inline json corners_to_json(const CornerPoints& c) {
    json aux;
    aux["d_t1"] = rational_to_json(c.aux.d_t1);
    aux["d_t2"] = rational_to_json(c.aux.d_t2);
    aux["d_r1"] = rational_to_json(c.aux.d_r1);
    aux["d_r2"] = rational_to_json(c.aux.d_r2);
    aux["delta_t1"] = rational_to_json(c.aux.delta_t1);
    aux["delta_t2"] = rational_to_json(c.aux.delta_t2);
    aux["delta_r1"] = rational_to_json(c.aux.delta_r1);
    aux["delta_r2"] = rational_to_json(c.aux.delta_r2);
    json j;
    j["prime"] = point_to_json(c.prime);
    j["double_prime"] = point_to_json(c.double_prime);
    j["aux"] = aux;
    return j;
}

inline json operator_dims_to_json(const OperatorDims& d) {
    json j;
    for (const auto& [name, value] : operator_dims_fields(d))
        j[name] = rational_to_json(value);
    return j;
}

/// Everything the `region` command reports for one scenario: the three
/// polygons, the bounds, both corner points, and the classification.
inline json region_doc_to_json(const Scenario& s) {
    json j;
    j["label"] = s.label;
    j["bounds"] = bounds_to_json(fd_bounds(s));
    j["corners"] = corners_to_json(corner_points_lemma1(s));
    j["vertices"] = vertices_to_json(fd_region(s));
    j["hd_vertices"] = vertices_to_json(hd_region(s));
    j["fdp_vertices"] = vertices_to_json(fdp_region(s));
    const Classification c = compare_regions(s);
    j["classification"] = c.text();
    j["rect_fd"] = c.fd_rectangular;
    j["rect_fdp"] = c.fdp_rectangular;
    return j;
}

/// Vertex lists of all three regions as plot-ready CSV.
inline std::string region_doc_to_csv(const Scenario& s) {
    std::string out = "region,d1,d2\n";
    const auto emit = [&out](const char* name, const DofRegion& r) {
        for (const Point& v : r.vertices())
            out += std::string(name) + "," + v.d1.to_decimal_string() + "," +
                   v.d2.to_decimal_string() + "\n";
    };
    emit("fd", fd_region(s));
    emit("hd", hd_region(s));
    emit("fdp", fdp_region(s));
    return out;
}

inline json sketch_to_json(const SketchConditions& c) {
    json j;
    j["c1"] = c.c1;
    j["c2"] = c.c2;
    j["c3"] = c.c3;
    j["c4"] = c.c4;
    j["all"] = c.all();
    return j;
}

inline json report_to_json(const OracleReport& r) {
    json j;
    j["label"] = r.label;
    j["grid_density"] = r.grid_density;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["analytic"] = operator_dims_to_json(r.analytic);
    j["numerical"] = operator_dims_to_json(r.numerical);
    j["max_rank_gap"] = r.max_rank_gap;
    j["preimage_dim_analytic"] = rational_to_json(r.preimage_dim_analytic);
    j["preimage_dim_numerical"] = rational_to_json(r.preimage_dim_numerical);
    j["corner_flow2_numerical"] = rational_to_json(r.corner_flow2_numerical);
    j["corner_d2_analytic"] = rational_to_json(r.corner_d2_analytic);
    j["max_corner_gap"] = rational_to_json(r.max_corner_gap);
    j["sketch"] = sketch_to_json(r.sketch);
    j["passed"] = r.passed();
    return j;
}

inline json sweep_to_json(const SweepResult& sweep) {
    json rows = json::array();
    for (const SweepRow& row : sweep.rows) {
        json r;
        r["param"] = rational_to_json(row.param);
        r["d1_max"] = rational_to_json(row.d1_max);
        r["d2_max"] = rational_to_json(row.d2_max);
        r["d_sum_fd"] = rational_to_json(row.d_sum_fd);
        r["d_sum_fdp"] = rational_to_json(row.d_sum_fdp);
        r["class"] = row.cls;
        r["rect_fd"] = row.rect_fd;
        rows.push_back(std::move(r));
    }
    json j;
    j["param_name"] = sweep.param_name;
    j["rows"] = std::move(rows);
    return j;
}

inline std::string sweep_to_csv(const SweepResult& sweep) {
    std::string out = "param,d1_max,d2_max,d_sum_fd,d_sum_fdp,class,rect_fd\n";
    for (const SweepRow& row : sweep.rows) {
        out += row.param.to_decimal_string() + "," + row.d1_max.to_decimal_string() + "," +
               row.d2_max.to_decimal_string() + "," + row.d_sum_fd.to_decimal_string() + "," +
               row.d_sum_fdp.to_decimal_string() + "," + row.cls + "," +
               (row.rect_fd ? "true" : "false") + "\n";
    }
    return out;
}

} // namespace fdx
