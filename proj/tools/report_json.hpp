#pragma once

// JSON forms of decompositions, difference tables and suite reports.
// Exact values are strings ("p/q" or "p"); key order is fixed.

#include "hookwalk/littlewood.hpp"
#include "hookwalk/operators.hpp"
#include "hookwalk/suites.hpp"

#include <json.hpp>

#include <string>

namespace hookwalk::io {

using Json = nlohmann::ordered_json;

inline Json rational_array(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

inline Json to_json(const Partition& lambda, const LittlewoodDecomposition& dec)
{
    Json quotients = Json::array();
    for (const auto& q : dec.quotients) quotients.push_back(to_string(q));
    const int rhs = dec.core.size() + dec.t * dec.weight();
    Json out;
    out["lambda"] = to_string(lambda);
    out["t"] = dec.t;
    out["core"] = to_string(dec.core);
    out["quotients"] = quotients;
    out["b"] = dec.offsets.b;
    out["d"] = dec.offsets.d;
    out["size_identity"] = {{"size", lambda.size()},
                            {"core_size", dec.core.size()},
                            {"quotient_weight", dec.weight()},
                            {"holds", lambda.size() == rhs}};
    return out;
}

inline Json to_json(const DifferenceTable& tab)
{
    Json diffs = Json::array();
    for (const auto& row : tab.diffs) diffs.push_back(rational_array(row));
    auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
    Json out;
    out["values"] = rational_array(tab.values);
    out["diffs"] = diffs;
    out["degree"] = tab.degree;
    out["window"] = {0, tab.window()};
    out["verdict"] = tab.verdict();
    out["witness"] = opt(tab.witness);
    out["vanishing_order"] = opt(tab.vanishing_order);
    out["telescoping"] = {{"checked", tab.telescoping_checked},
                          {"ok", tab.telescoping_ok},
                          {"witness", opt(tab.telescoping_witness)}};
    return out;
}

inline Json to_json(const SuiteReport& r)
{
    Json grid = Json::object();
    for (const auto& [k, v] : r.grid) grid[k] = v;
    Json groups = Json::array();
    for (const auto& g : r.groups) groups.push_back({{"name", g.name}, {"checks", g.checks}, {"failures", g.failures}});
    Json out;
    out["suite"] = r.name;
    out["grid"] = grid;
    out["checks"] = r.checks;
    out["failures"] = r.failures;
    if (r.first_failure)
        out["first_failure"] = {{"check", r.first_failure->check},
                                {"inputs", r.first_failure->inputs},
                                {"lhs", r.first_failure->lhs},
                                {"rhs", r.first_failure->rhs}};
    else
        out["first_failure"] = nullptr;
    out["groups"] = groups;
    out["notes"] = r.notes;
    out["wall_seconds"] = r.wall_seconds;
    return out;
}

} // namespace hookwalk::io
