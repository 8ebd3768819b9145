// Genus estimation and nontriviality certification for braid closures.
//
// The lower bound is half the span of the Alexander polynomial, the upper
// bound is the Seifert-algorithm surface genus. Exactness is certified only
// for homogeneous braids (Stallings fibering) or when the bounds coincide;
// otherwise the estimate is an honest interval.

#pragma once

#include <optional>
#include <string>

#include "slopecalc/braid.hpp"
#include "slopecalc/burau.hpp"
#include "slopecalc/errors.hpp"

namespace slopecalc {

enum class GenusMethod { AlexanderSpan, SeifertAlgorithm, HomogeneousBraid, BoundsCoincide };

inline const char* to_string(GenusMethod m) {
    switch (m) {
        case GenusMethod::AlexanderSpan: return "alexander_span";
        case GenusMethod::SeifertAlgorithm: return "seifert_algorithm";
        case GenusMethod::HomogeneousBraid: return "homogeneous_braid";
        case GenusMethod::BoundsCoincide: return "bounds_coincide";
    }
    return "unknown";
}

struct GenusEstimate {
    long long lower = 0;
    long long upper = 0;
    bool exact = false;
    GenusMethod method = GenusMethod::AlexanderSpan;

    bool operator==(const GenusEstimate&) const = default;
};

inline GenusEstimate make_genus_estimate(long long lower, long long upper, bool exact,
                                         GenusMethod method) {
    if (lower < 0 || upper < 0 || lower > upper || (exact && lower != upper))
        throw internal_error("inconsistent genus estimate");
    return GenusEstimate{lower, upper, exact, method};
}

inline GenusEstimate knot_genus(const BraidWord& b) {
    require_knot_closure(b);
    const LaurentPolynomial delta = alexander_polynomial(b);
    if (delta.span() % 2 != 0) throw internal_error("Alexander span is odd on a knot closure");
    long long lower = delta.span() / 2;
    const long long upper = seifert_genus_upper(b);
    if (lower > upper) throw internal_error("Alexander bound exceeds the Seifert bound");
    if (is_homogeneous(b))
        return make_genus_estimate(upper, upper, true, GenusMethod::HomogeneousBraid);
    if (lower == upper) return make_genus_estimate(lower, upper, true, GenusMethod::BoundsCoincide);
    return make_genus_estimate(lower, upper, false, GenusMethod::AlexanderSpan);
}

enum class TriState { Nontrivial, Unknown, Trivial };

inline const char* to_string(TriState t) {
    switch (t) {
        case TriState::Nontrivial: return "nontrivial";
        case TriState::Unknown: return "unknown";
        case TriState::Trivial: return "trivial";
    }
    return "unknown";
}

inline TriState is_nontrivial_knot(const BraidWord& b) {
    require_knot_closure(b);
    if (!(alexander_polynomial(b) == LaurentPolynomial(1))) return TriState::Nontrivial;
    const GenusEstimate g = knot_genus(b);
    if (g.exact) return g.lower > 0 ? TriState::Nontrivial : TriState::Trivial;
    return TriState::Unknown;
}

}  // namespace slopecalc
