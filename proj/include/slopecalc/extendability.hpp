// Finiteness and index criteria for (stable) extendable subgroups of
// Mod(T^2).
//
// Verdicts are certificates, not group computations: each criterion yields a
// one-directional conclusion tagged with its citation, and the library never
// claims membership beyond what the criterion gives.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "slopecalc/errors.hpp"
#include "slopecalc/mapping_class.hpp"
#include "slopecalc/satellite.hpp"

namespace slopecalc {

enum class VerdictSubject { ExtendableSubgroup, StableExtendableSubgroup };

inline const char* to_string(VerdictSubject s) {
    return s == VerdictSubject::ExtendableSubgroup ? "extendable_subgroup"
                                                   : "stable_extendable_subgroup";
}

enum class VerdictConclusion { Finite, InfiniteIndex, IndexAtLeast, StablyExtendable, NoConclusion };

inline const char* to_string(VerdictConclusion c) {
    switch (c) {
        case VerdictConclusion::Finite: return "finite";
        case VerdictConclusion::InfiniteIndex: return "infinite_index";
        case VerdictConclusion::IndexAtLeast: return "index_at_least";
        case VerdictConclusion::StablyExtendable: return "stably_extendable";
        case VerdictConclusion::NoConclusion: return "no_conclusion";
    }
    return "unknown";
}

struct Justification {
    std::string citation;
    std::string detail;

    bool operator==(const Justification&) const = default;
};

struct ExtendabilityVerdict {
    VerdictSubject subject = VerdictSubject::StableExtendableSubgroup;
    VerdictConclusion conclusion = VerdictConclusion::NoConclusion;
    std::optional<long long> index_bound;  // set exactly when conclusion is IndexAtLeast
    Justification justification;

    bool operator==(const ExtendabilityVerdict&) const = default;
};

/// Nondegeneracy of the exact plumbing norm forces the stable extendable
/// subgroup to be finite.
inline ExtendabilityVerdict finiteness_from_norm(const SatelliteSpec& sat) {
    if (!is_plumbing(sat.twist))
        throw hypothesis_error(citation::lemma_4_9,
                               "exact norm unavailable: the twist is not the plumbing twist");
    require_nontrivial(sat.companion, "companion");
    require_nontrivial(sat.pattern, "pattern");
    detail::require_exact_genus(sat.companion, "companion", citation::lemma_4_9);
    detail::require_exact_genus(sat.pattern, "pattern", citation::lemma_4_9);
    // (2g'-1)|y| + (2g-1)|x| with g, g' >= 1 vanishes only at the origin.
    return ExtendabilityVerdict{
        VerdictSubject::StableExtendableSubgroup, VerdictConclusion::Finite, std::nullopt,
        Justification{citation::lemma_4_9,
                      "the plumbing norm (2g'-1)|y|+(2g-1)|x| is nondegenerate"}};
}

/// A twist that does not fix xi up to sign forces finiteness.
inline ExtendabilityVerdict finiteness_from_twist(const SatelliteSpec& sat) {
    require_nontrivial(sat.companion, "companion");
    require_nontrivial(sat.pattern, "pattern");
    if (!fixes_xi_up_to_sign(sat.twist))
        return ExtendabilityVerdict{
            VerdictSubject::StableExtendableSubgroup, VerdictConclusion::Finite, std::nullopt,
            Justification{citation::cor_5_6, "twist [" + sat.twist.to_string() +
                                                 "] does not fix xi up to sign"}};
    return ExtendabilityVerdict{
        VerdictSubject::StableExtendableSubgroup, VerdictConclusion::NoConclusion, std::nullopt,
        Justification{citation::cor_5_6,
                      "twist fixes xi up to sign, so the criterion is silent"}};
}

/// The number of distinct values of a slope invariant bounds the index of
/// the stable extendable subgroup from below.
template <class Value>
ExtendabilityVerdict index_lower_bound(const std::map<Slope, Value>& values) {
    if (values.empty())
        throw parse_error("index_lower_bound requires a nonempty value map");
    std::set<Value> distinct;
    for (const auto& [slope, value] : values) distinct.insert(value);
    const long long k = static_cast<long long>(distinct.size());
    return ExtendabilityVerdict{
        VerdictSubject::StableExtendableSubgroup, VerdictConclusion::IndexAtLeast, k,
        Justification{citation::prop_3_6, std::to_string(k) + " distinct invariant values over " +
                                              std::to_string(values.size()) + " slopes"}};
}

/// A slope of vanishing singular genus has a stably extendable Dehn twist.
inline ExtendabilityVerdict dehn_twist_stably_extendable(const Slope& c, long long singular_genus) {
    if (singular_genus < 0)
        throw std::invalid_argument("singular genus must be nonnegative");
    if (singular_genus == 0)
        return ExtendabilityVerdict{
            VerdictSubject::StableExtendableSubgroup, VerdictConclusion::StablyExtendable,
            std::nullopt,
            Justification{citation::lemma_6_2, "g* vanishes along slope " + std::to_string(c.x) +
                                                   "/" + std::to_string(c.y)}};
    return ExtendabilityVerdict{
        VerdictSubject::StableExtendableSubgroup, VerdictConclusion::NoConclusion, std::nullopt,
        Justification{citation::lemma_6_2,
                      "criterion applies only when the singular genus vanishes (got " +
                          std::to_string(singular_genus) + ")"}};
}

struct UnknottedTorusFacts {
    std::string stable_subgroup = "all_of_mod_t2";
    long long extendable_index = 3;
    long long universal_index_floor = 3;
    bool stable_contains_extendable = true;
    std::string stable_citation = citation::section_6_2;
    std::string index_citation = citation::section_6_2;
    std::string floor_citation = citation::section_3_2;

    bool operator==(const UnknottedTorusFacts&) const = default;
};

inline UnknottedTorusFacts unknotted_torus_facts() { return UnknottedTorusFacts{}; }

}  // namespace slopecalc
