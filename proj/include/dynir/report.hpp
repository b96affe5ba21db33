/*
   Copyright 2026 The dynir Authors

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

/**
 * @file report.hpp
 * @brief JSON, CSV and DOT renderings of the library's results.
 *
 * JSON objects have sorted keys, so identical inputs give byte-identical output. Integers are decimal.
 */

#ifndef DYNIR_REPORT_HPP
#define DYNIR_REPORT_HPP

#include <nlohmann/json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubic.hpp"
#include "linearized.hpp"
#include "unicritical.hpp"

namespace dynir {

using Json = nlohmann::json;

inline constexpr int kCsvVersion = 1;

namespace detail {

inline Json nested(const Elem& a, std::size_t level, std::size_t offset) {
    if (level == 0) return a.coeffs()[offset];
    const Field L = a.field().at_level(level);
    const std::size_t w = L.parent().degree();
    Json out = Json::array();
    for (std::size_t i = 0; i < L.relative_degree(); ++i) out.push_back(nested(a, level - 1, offset + i * w));
    return out;
}

}  // namespace detail

inline Json field_json(const Field& F) {
    return {{"p", F.characteristic()}, {"tower_degrees", F.tower_degrees()}};
}

inline Json to_json(const Elem& a) {
    return {{"p", a.field().characteristic()},
            {"tower_degrees", a.field().tower_degrees()},
            {"coeffs", detail::nested(a, a.field().level(), 0)}};
}

inline Json to_json(const Poly& f) {
    Json cs = Json::array();
    for (const auto& c : f.coefficients()) cs.push_back(detail::nested(c, c.field().level(), 0));
    return {{"field", field_json(f.field())}, {"coeffs", cs}, {"text", f.to_string()}};
}

inline Json to_json(const Verdict& v) {
    Json j{{"kind", std::string(kind_name(v.kind))}, {"reason", v.reason}, {"detail", v.detail}};
    j["iterate"] = v.iterate ? Json(*v.iterate) : Json(nullptr);
    j["text"] = v.to_string();
    return j;
}

inline Json to_json(const ResidueVerdict& r) {
    Json j{{"r", r.r}, {"value", r.value.to_string()}, {"is_rth_power", r.is_rth_power}};
    if (r.witness) j["witness"] = r.witness->to_string();
    return j;
}

inline Json to_json(const OrbitReport& o) {
    Json tail = Json::array(), cycle = Json::array(), adjusted = Json::array(), set = Json::array();
    for (const auto& e : o.orbit.tail) tail.push_back(e.to_string());
    for (const auto& e : o.orbit.cycle) cycle.push_back(e.to_string());
    for (const auto& a : o.adjusted) {
        Json tests = Json::array();
        for (const auto& t : a.tests) tests.push_back(to_json(t));
        adjusted.push_back({{"n", a.n}, {"value", a.value.to_string()}, {"tests", tests}});
    }
    for (const auto& v : o.value_set()) set.push_back(v.to_string());
    return {{"seed", o.orbit.seed.to_string()}, {"tail", tail},           {"cycle", cycle},
            {"adjusted_values", adjusted},     {"adjusted_set", set},     {"verdict", to_json(o.verdict)}};
}

inline Json to_json(const DicksonResult& d) {
    Json mu = Json::array(), vals = Json::array(), tests = Json::array();
    for (const auto& m : d.mu) mu.push_back(m.to_string());
    for (const auto& v : d.values) vals.push_back(v.to_string());
    for (const auto& t : d.cube_tests) tests.push_back(to_json(t));
    Json j{{"disc", d.disc.to_string()}, {"disc_nonzero_square", d.disc_nonzero_square}, {"mu", mu},
           {"values", vals},             {"cube_tests", tests},                         {"irreducible", d.irreducible}};
    j["sqrt_minus3"] = d.sqrt_minus3 ? Json(d.sqrt_minus3->to_string()) : Json(nullptr);
    return j;
}

inline Json to_json(const Condition1Result& c) {
    Json vals = Json::array();
    for (const auto& v : c.values) vals.push_back(v.to_string());
    Json j{{"values", vals}, {"all_square", c.all_square}, {"decided", c.decided}};
    j["first_failure"] = c.first_failure ? Json(*c.first_failure) : Json(nullptr);
    j["tail"] = c.tail ? Json(*c.tail) : Json(nullptr);
    j["cycle"] = c.cycle ? Json(*c.cycle) : Json(nullptr);
    return j;
}

inline Json to_json(const CubicReport& r) {
    Json levels = Json::array();
    for (const auto& l : r.levels) {
        Json j{{"n", l.n}, {"cond1_value", l.cond1_value.to_string()}, {"cond1_square", l.cond1_square}};
        if (l.cond2) {
            j["mu_branch"] = "canonical";
            j["mu"] = l.cond2->mu.to_string();
            j["cond2_norm"] = l.cond2->norm.to_string();
            j["cond2_cube"] = l.cond2->cube;
            j["alt_norm"] = l.cond2->alt_norm.to_string();
            j["alt_cube"] = l.cond2->alt_cube;
            j["verdict"] = l.cond2->passes() ? "irreducible" : "reducible";
        } else {
            j["mu_branch"] = nullptr;
            j["cond2_norm"] = nullptr;
            j["cond2_cube"] = nullptr;
            j["verdict"] = l.cond1_square ? "not_tested" : "reducible";
        }
        levels.push_back(j);
    }
    Json oracle = Json::array();
    for (const auto& [k, irr] : r.oracle) oracle.push_back({{"iterate", k}, {"irreducible", irr}});
    Json h{{"b3", r.h.b3.to_string()},
           {"b1", r.h.b1.to_string()},
           {"b0", r.h.b0.to_string()},
           {"beta0", r.h.beta0.to_string()},
           {"text", r.h.poly().to_string()}};
    return {{"depressed", h},       {"cond1", to_json(r.cond1)}, {"levels", levels},
            {"oracle", oracle},     {"sqrt_minus3_adjoined", r.base_extended}, {"verdict", to_json(r.verdict)}};
}

inline Json to_json(const ChuCriterion& c) {
    Json roots = Json::array(), cubes = Json::array();
    for (const auto& x : c.roots) roots.push_back(x.to_string());
    for (bool b : c.cubes) cubes.push_back(b);
    return {{"disc", c.disc.to_string()},
            {"disc_nonzero_square", c.disc_nonzero_square},
            {"roots", roots},
            {"cubes", cubes},
            {"holds", c.holds}};
}

inline Json to_json(const CohenResult& c) {
    Json j{{"irreducible", c.irreducible}};
    j["A"] = c.witness.A ? Json(c.witness.A->to_string()) : Json(nullptr);
    j["trace_value"] = c.witness.trace_value ? Json(c.witness.trace_value->to_string()) : Json(nullptr);
    return j;
}

inline Json to_json(const LinearizedSweep& s) {
    Json ce = Json::array(), irr2 = Json::array();
    for (const auto& f : s.counterexamples) ce.push_back(f.to_string());
    for (const auto& f : s.irreducible_at_2) irr2.push_back(f.to_string());
    Json j{{"field", s.field},          {"exhaustive", s.exhaustive}, {"seed", s.seed},
           {"total", s.total},          {"reducible_at_2", s.reducible_at_2},
           {"counterexamples", ce},     {"irreducible_at_2", irr2}};
    j["reducible_at_3"] = s.reducible_at_3 ? Json(*s.reducible_at_3) : Json(nullptr);
    return j;
}

inline Json to_json(const FactorList& fl) {
    Json fs = Json::array();
    for (const auto& [g, m] : fl.factors) fs.push_back({{"factor", g.to_string()}, {"multiplicity", m}});
    return {{"unit", fl.unit.to_string()}, {"factors", fs}, {"seed", fl.seed}};
}

/// Critical portrait: the forward orbits of the seeds under f, nodes labelled by value.
inline std::string portrait_dot(const Poly& f, const std::vector<Elem>& seeds, const std::string& name = "portrait") {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;
    std::vector<std::string> order;
    for (const auto& s : seeds) {
        const Orbit o = forward_orbit(f, s);
        const std::size_t n = o.size();
        for (std::size_t i = 0; i < n; ++i) {
            const std::string a = o.at(i).to_string(), b = o.at(i + 1).to_string();
            if (nodes.insert(a).second) order.push_back(a);
            edges.emplace(a, b);
        }
    }
    for (const auto& v : order) out << "  \"" << v << "\";\n";
    for (const auto& [a, b] : edges) out << "  \"" << a << "\" -> \"" << b << "\" [label=\"f\"];\n";
    out << "}\n";
    return out.str();
}

/// CSV with a versioned comment header; fields containing commas or quotes are quoted.
inline std::string csv(const std::string& table, const std::vector<std::string>& columns,
                       const std::vector<std::vector<std::string>>& rows) {
    auto cell = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    std::ostringstream out;
    out << "# dynir-csv v" << kCsvVersion << " " << table << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << cell(columns[i]);
    out << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << cell(r[i]);
        out << "\n";
    }
    return out.str();
}

}  // namespace dynir

#endif
