#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "constitution/amendment.hpp"
#include "constitution/axioms.hpp"
#include "constitution/core.hpp"
#include "constitution/preferences.hpp"

namespace constitution {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const Rule& rule) {
    return Json{{"n", rule.n}, {"m", rule.m}, {"delta", canonical_delta(rule).str()}};
}

inline Json to_json(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

inline const char* to_string(AmendDirection d) {
    switch (d) {
        case AmendDirection::Increase: return "increase";
        case AmendDirection::Decrease: return "decrease";
        default: return "none";
    }
}

inline const char* to_string(AmendmentMethod m) {
    return m == AmendmentMethod::Condorcet ? "condorcet" : "conservative";
}

inline Json to_json(const AmendmentOutcome& out) {
    Json j;
    j["decision"] = out.amend ? "amend" : "retain";
    j["direction"] = to_string(out.direction);
    if (out.amend) {
        j["new_rule"] = to_json(*out.new_rule);
        j["support"] = out.support;
        j["ballot"] = out.ballot->str();
    }
    return j;
}

inline Json to_json(const OracleDiagnostic& diag) {
    Json j;
    j["survivors"] = to_json(diag.survivors);
    j["undominated"] = to_json(diag.undominated);
    j["max_approval"] = to_json(diag.max_approval);
    j["undominated_unique"] = diag.undominated_unique;
    j["max_approval_matches_undominated"] = diag.max_approval_matches_undominated;
    return j;
}

inline Json to_json(const Trajectory& traj) {
    Json steps = Json::array();
    for (const auto& [rule, outcome] : traj.steps) {
        Json step;
        step["rule"] = to_json(rule);
        step["outcome"] = to_json(outcome);
        steps.push_back(std::move(step));
    }
    return Json{{"steps", std::move(steps)}, {"terminal", to_json(traj.terminal)}};
}

inline Json to_json(const EnumerationReport& report) {
    Json survivors = Json::array();
    for (const auto& rec : report.survivors) {
        Json s;
        s["degenerate"] = rec.degenerate;
        if (rec.threshold) s["threshold"] = *rec.threshold;
        survivors.push_back(std::move(s));
    }
    Json j;
    j["n"] = report.n;
    j["mode"] = report.mode == EnumerationMode::FullTable ? "full" : "count";
    j["candidates"] = report.candidates;
    j["survivors"] = std::move(survivors);
    j["all_threshold"] = report.all_threshold;
    if (report.minimality_winner) j["minimality_winner"] = to_json(*report.minimality_winner);
    return j;
}

inline Json to_json(const IdealProfile& ideals) {
    return Json{{"n", ideals.n()}, {"ideals", to_json(ideals.ideals())}};
}

struct CommunityDocument {
    int n = 0;
    std::vector<Rational> ideals;       // raw, before snapping
    std::optional<Rational> delta;      // current rule, when present
};

/// Parses { "n": int, "ideals": [rational or decimal strings],
/// "delta": optional rational string }.
inline CommunityDocument parse_community(const Json& j) {
    CommunityDocument doc;
    if (!j.is_object() || !j.contains("n") || !j.contains("ideals"))
        throw parse_error("community document needs \"n\" and \"ideals\"");
    doc.n = j.at("n").get<int>();
    for (const auto& item : j.at("ideals")) {
        if (item.is_string())
            doc.ideals.push_back(Rational::parse(item.get<std::string>()));
        else if (item.is_number_integer())
            doc.ideals.push_back(Rational(item.get<std::int64_t>()));
        else
            throw parse_error("ideal points must be rational or decimal strings");
    }
    if (static_cast<int>(doc.ideals.size()) != doc.n)
        throw dimension_error("ideal list length does not match n");
    if (j.contains("delta")) doc.delta = Rational::parse(j.at("delta").get<std::string>());
    return doc;
}

}  // namespace constitution
