// JSON (de)serialization for reports and verdicts.
//
// Output is deterministic: nlohmann::json objects keep keys sorted, every
// number is an exact integer, and rationals are rendered as "p/q" strings.

#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "slopecalc/extendability.hpp"
#include "slopecalc/genus.hpp"
#include "slopecalc/rational.hpp"
#include "slopecalc/satellite.hpp"
#include "slopecalc/word_oracle.hpp"

namespace slopecalc {

using json = nlohmann::json;

inline json to_json(const SeminormValue& v) {
    return json{{"value", to_string(v.value)}, {"kind", to_string(v.kind)}};
}

inline SeminormValue seminorm_from_json(const json& j) {
    SeminormValue v;
    v.value = parse_rational(j.at("value").get<std::string>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "exact")
        v.kind = NormKind::Exact;
    else if (kind == "lower_bound")
        v.kind = NormKind::LowerBound;
    else
        throw parse_error("unknown norm kind '" + kind + "'");
    return v;
}

inline json to_json(const GenusEstimate& g) {
    return json{{"lower", g.lower}, {"upper", g.upper}, {"exact", g.exact},
                {"method", to_string(g.method)}};
}

inline json to_json(const GenusBounds& b) {
    json j = json::object();
    if (b.singular_lower) j["lower"] = *b.singular_lower;
    if (b.singular_upper) j["upper"] = *b.singular_upper;
    if (b.singular_exact) j["exact"] = *b.singular_exact;
    return j;
}

inline json to_json(const SlopeReport& r) {
    json j;
    j["slope"] = json::array({r.slope.x, r.slope.y});
    if (r.norm) j["norm"] = to_json(*r.norm);
    if (r.norm_error) j["norm_error"] = *r.norm_error;
    j["singular_genus"] = to_json(r.genus);
    if (r.singular_error) j["singular_genus_error"] = *r.singular_error;
    if (r.genus.genus_upper) j["genus_upper"] = *r.genus.genus_upper;
    if (r.genus_upper_error) j["genus_upper_error"] = *r.genus_upper_error;
    return j;
}

inline SlopeReport slope_report_from_json(const json& j) {
    SlopeReport r;
    r.slope = Slope{j.at("slope").at(0).get<Int>(), j.at("slope").at(1).get<Int>()};
    if (j.contains("norm")) r.norm = seminorm_from_json(j.at("norm"));
    if (j.contains("norm_error")) r.norm_error = j.at("norm_error").get<std::string>();
    const json& sg = j.at("singular_genus");
    if (sg.contains("lower")) r.genus.singular_lower = sg.at("lower").get<long long>();
    if (sg.contains("upper")) r.genus.singular_upper = sg.at("upper").get<long long>();
    if (sg.contains("exact")) r.genus.singular_exact = sg.at("exact").get<long long>();
    if (j.contains("singular_genus_error"))
        r.singular_error = j.at("singular_genus_error").get<std::string>();
    if (j.contains("genus_upper")) r.genus.genus_upper = j.at("genus_upper").get<long long>();
    if (j.contains("genus_upper_error"))
        r.genus_upper_error = j.at("genus_upper_error").get<std::string>();
    return r;
}

inline json to_json(const ExtendabilityVerdict& v) {
    json j;
    j["subject"] = to_string(v.subject);
    j["conclusion"] = to_string(v.conclusion);
    if (v.index_bound) j["k"] = *v.index_bound;
    j["justification"] = json{{"citation", v.justification.citation},
                              {"detail", v.justification.detail}};
    return j;
}

inline ExtendabilityVerdict verdict_from_json(const json& j) {
    ExtendabilityVerdict v;
    const std::string subject = j.at("subject").get<std::string>();
    v.subject = subject == "extendable_subgroup" ? VerdictSubject::ExtendableSubgroup
                                                 : VerdictSubject::StableExtendableSubgroup;
    const std::string conclusion = j.at("conclusion").get<std::string>();
    if (conclusion == "finite")
        v.conclusion = VerdictConclusion::Finite;
    else if (conclusion == "infinite_index")
        v.conclusion = VerdictConclusion::InfiniteIndex;
    else if (conclusion == "index_at_least")
        v.conclusion = VerdictConclusion::IndexAtLeast;
    else if (conclusion == "stably_extendable")
        v.conclusion = VerdictConclusion::StablyExtendable;
    else
        v.conclusion = VerdictConclusion::NoConclusion;
    if (j.contains("k")) v.index_bound = j.at("k").get<long long>();
    v.justification.citation = j.at("justification").at("citation").get<std::string>();
    v.justification.detail = j.at("justification").at("detail").get<std::string>();
    return v;
}

inline json to_json(const UnknottedTorusFacts& f) {
    return json{{"stable_extendable_subgroup", f.stable_subgroup},
                {"extendable_subgroup_index", f.extendable_index},
                {"universal_index_floor", f.universal_index_floor},
                {"stable_contains_extendable", f.stable_contains_extendable},
                {"citations", json{{"stable", f.stable_citation},
                                   {"index", f.index_citation},
                                   {"floor", f.floor_citation}}}};
}

inline json to_json(const UnitBallResult& ball) {
    json j;
    j["kind"] = to_string(ball.kind);
    if (ball.kind == UnitBallKind::Degenerate) {
        j["null_direction"] = json::array({ball.null_direction->x, ball.null_direction->y});
    } else {
        json vertices = json::array();
        for (const RationalPoint& v : ball.vertices)
            vertices.push_back(json::array({to_string(v.x), to_string(v.y)}));
        j["vertices"] = vertices;
    }
    return j;
}

inline json to_json(const GroupWord& w) {
    json letters = json::array();
    for (int letter : w.letters) letters.push_back(letter);
    return json{{"rank", w.rank}, {"letters", letters}};
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace slopecalc
