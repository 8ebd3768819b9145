// Seminorms of braid tori and braid satellites, with the derived genus
// bounds and unit-ball geometry.
//
// A braid torus spec carries a braid b whose closure is a nontrivial knot of
// genus g; its seminorm is (2g-1)|y| on the class x*xi + y*eta. A satellite
// spec composes a companion braid torus, an SL(2,Z) twist tau = [[p,q],[r,s]]
// and a braid pattern of winding number w'. The satellite seminorm obeys
//
//   |x*xi + y*eta|  >=  (2g'-1)|y| + (2g-1)|r x + s w' y|,
//
// with equality for the plumbing twist, where the norm is
// (2g'-1)|y| + (2g-1)|x| and the unit ball is the rhombus with vertices
// (+-1/(2g-1), 0) and (0, +-1/(2g'-1)).
//
// When a genus estimate is an interval, formulas evaluate at the lower end
// and the result is downgraded to a lower bound; (2g-1) is increasing in g,
// so this is the only sound direction.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slopecalc/braid.hpp"
#include "slopecalc/errors.hpp"
#include "slopecalc/genus.hpp"
#include "slopecalc/mapping_class.hpp"
#include "slopecalc/rational.hpp"

namespace slopecalc {

enum class NormKind { Exact, LowerBound };

inline const char* to_string(NormKind k) {
    return k == NormKind::Exact ? "exact" : "lower_bound";
}

struct SeminormValue {
    Rational value{0};
    NormKind kind = NormKind::Exact;

    bool operator==(const SeminormValue&) const = default;
};

struct BraidTorusSpec {
    BraidWord braid;
    GenusEstimate genus;
    TriState nontriviality = TriState::Unknown;

    static BraidTorusSpec from_braid(const BraidWord& b,
                                     std::optional<long long> genus_override = std::nullopt) {
        require_knot_closure(b);
        BraidTorusSpec spec;
        spec.braid = b;
        if (genus_override) {
            if (*genus_override < 1) throw parse_error("genus override must be a positive integer");
            spec.genus = make_genus_estimate(*genus_override, *genus_override, true,
                                             GenusMethod::BoundsCoincide);
            spec.nontriviality = TriState::Nontrivial;
        } else {
            spec.genus = knot_genus(b);
            spec.nontriviality = is_nontrivial_knot(b);
        }
        return spec;
    }
};

struct SatelliteSpec {
    BraidTorusSpec companion;
    MappingClass twist;
    BraidTorusSpec pattern;
    int pattern_winding = 1;  // w' = winding_number(pattern.braid)

    static SatelliteSpec make(BraidTorusSpec companion, MappingClass twist, BraidTorusSpec pattern) {
        SatelliteSpec spec{std::move(companion), twist, std::move(pattern), 1};
        spec.pattern_winding = winding_number(spec.pattern.braid);
        return spec;
    }
};

/// Throws unless the associated knot is certified nontrivial.
inline void require_nontrivial(const BraidTorusSpec& spec, const char* role) {
    switch (spec.nontriviality) {
        case TriState::Nontrivial: return;
        case TriState::Trivial:
            throw hypothesis_error(citation::prop_5_3,
                                   std::string("requires a nontrivial associated knot; the ") + role +
                                       " braid closes to the unknot");
        case TriState::Unknown:
            throw hypothesis_error(citation::prop_5_3,
                                   std::string("requires a nontrivial associated knot; "
                                               "nontriviality of the ") + role +
                                       " braid closure could not be certified");
    }
}

namespace detail {

// Lower genus end and whether the value is exact.
inline std::pair<long long, bool> genus_for_formula(const BraidTorusSpec& spec) {
    return {spec.genus.lower, spec.genus.exact};
}

inline void require_exact_genus(const BraidTorusSpec& spec, const char* role, const char* cite) {
    if (!spec.genus.exact)
        throw hypothesis_error(cite, std::string("requires an exact genus for the ") + role +
                                         " knot; only the interval [" +
                                         std::to_string(spec.genus.lower) + ", " +
                                         std::to_string(spec.genus.upper) + "] is certified");
}

}  // namespace detail

/// Push-forward of a homology class under a pattern of winding number w':
/// (x, y) -> (x, w'y).
inline HomologyClass pattern_pushforward(const HomologyClass& gamma, Int pattern_winding) {
    return HomologyClass{gamma.x, Rational(pattern_winding) * gamma.y};
}

/// Seminorm of a braid torus: (2g-1)|y|, exact when the genus is certified.
inline SeminormValue braid_torus_norm(const BraidTorusSpec& torus, const HomologyClass& gamma) {
    require_nontrivial(torus, "braid torus");
    const auto [g, exact] = detail::genus_for_formula(torus);
    const Rational coefficient(2 * g - 1);
    return SeminormValue{coefficient * rational_abs(gamma.y),
                         exact ? NormKind::Exact : NormKind::LowerBound};
}

/// Schubert-type lower bound for a braid satellite:
/// (2g'-1)|y| + (2g-1)|r x + s w' y|. Exact for plumbing twists with
/// certified genera.
inline SeminormValue schubert_lower_bound(const SatelliteSpec& sat, const HomologyClass& gamma) {
    require_nontrivial(sat.companion, "companion");
    require_nontrivial(sat.pattern, "pattern");
    const auto [g, g_exact] = detail::genus_for_formula(sat.companion);
    const auto [gp, gp_exact] = detail::genus_for_formula(sat.pattern);
    const Rational pattern_term = Rational(2 * gp - 1) * rational_abs(gamma.y);
    const Rational pushed = Rational(sat.twist.r) * gamma.x +
                            Rational(sat.twist.s) * Rational(sat.pattern_winding) * gamma.y;
    const Rational companion_term = Rational(2 * g - 1) * rational_abs(pushed);
    const bool exact = is_plumbing(sat.twist) && g_exact && gp_exact;
    return SeminormValue{pattern_term + companion_term,
                         exact ? NormKind::Exact : NormKind::LowerBound};
}

/// Exact seminorm of a plumbing braid satellite: (2g'-1)|y| + (2g-1)|x|.
inline SeminormValue plumbing_norm(const SatelliteSpec& sat, const HomologyClass& gamma) {
    if (!is_plumbing(sat.twist))
        throw hypothesis_error(citation::prop_5_5,
                               "equality holds only for plumbing twists; twist [" +
                                   sat.twist.to_string() + "] is not the plumbing twist");
    require_nontrivial(sat.companion, "companion");
    require_nontrivial(sat.pattern, "pattern");
    detail::require_exact_genus(sat.companion, "companion", citation::prop_5_5);
    detail::require_exact_genus(sat.pattern, "pattern", citation::prop_5_5);
    const Rational value = Rational(2 * sat.companion.genus.lower - 1) * rational_abs(gamma.x) +
                           Rational(2 * sat.pattern.genus.lower - 1) * rational_abs(gamma.y);
    return SeminormValue{value, NormKind::Exact};
}

enum class UnitBallKind { ExactBall, OuterApproximation, Degenerate };

inline const char* to_string(UnitBallKind k) {
    switch (k) {
        case UnitBallKind::ExactBall: return "exact";
        case UnitBallKind::OuterApproximation: return "outer_approximation";
        case UnitBallKind::Degenerate: return "degenerate";
    }
    return "unknown";
}

struct RationalPoint {
    Rational x{0};
    Rational y{0};

    bool operator==(const RationalPoint&) const = default;
};

struct UnitBallResult {
    UnitBallKind kind = UnitBallKind::ExactBall;
    std::vector<RationalPoint> vertices;       // counterclockwise; empty when degenerate
    std::optional<Slope> null_direction;       // set when degenerate

    bool operator==(const UnitBallResult&) const = default;
};

/// Unit ball of the satellite seminorm. Exact rhombus for plumbing specs;
/// otherwise the outer bound region of the Schubert lower-bound norm, or the
/// null direction when that lower bound is degenerate.
inline UnitBallResult unit_ball_polygon(const SatelliteSpec& sat) {
    require_nontrivial(sat.companion, "companion");
    require_nontrivial(sat.pattern, "pattern");
    if (is_plumbing(sat.twist) && sat.companion.genus.exact && sat.pattern.genus.exact) {
        const Rational ax(1, 2 * sat.companion.genus.lower - 1);
        const Rational ay(1, 2 * sat.pattern.genus.lower - 1);
        return UnitBallResult{UnitBallKind::ExactBall,
                              {RationalPoint{ax, Rational(0)}, RationalPoint{Rational(0), ay},
                               RationalPoint{-ax, Rational(0)}, RationalPoint{Rational(0), -ay}},
                              std::nullopt};
    }
    const Int g = sat.companion.genus.lower;
    const Int gp = sat.pattern.genus.lower;
    const Int r = sat.twist.r;
    const Int c = sat.twist.s * sat.pattern_winding;
    if (r == 0) return UnitBallResult{UnitBallKind::Degenerate, {}, Slope{1, 0}};
    // The bound a|y| + b|rx + cy| is the rhombus a|u| + b|v| pulled back
    // through u = y, v = rx + cy.
    const Rational a(2 * gp - 1);
    const Rational b(2 * g - 1);
    const auto back = [&](const Rational& u, const Rational& v) {
        return RationalPoint{(v - Rational(c) * u) / Rational(r), u};
    };
    std::vector<RationalPoint> vertices{back(Rational(1) / a, Rational(0)),
                                        back(Rational(0), Rational(1) / b),
                                        back(-Rational(1) / a, Rational(0)),
                                        back(Rational(0), -Rational(1) / b)};
    // Restore counterclockwise order when the pullback reverses orientation.
    Rational twice_area(0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const RationalPoint& p = vertices[i];
        const RationalPoint& n = vertices[(i + 1) % vertices.size()];
        twice_area += p.x * n.y - n.x * p.y;
    }
    if (twice_area < Rational(0)) std::reverse(vertices.begin(), vertices.end());
    return UnitBallResult{UnitBallKind::OuterApproximation, std::move(vertices), std::nullopt};
}

struct GenusBounds {
    std::optional<long long> singular_lower;
    std::optional<long long> singular_upper;
    std::optional<long long> singular_exact;
    std::optional<long long> genus_upper;

    bool operator==(const GenusBounds&) const = default;
};

/// Singular-genus bounds along a slope. Plumbing specs get the two-sided
/// bound (norm+1)/2 <= g* <= (norm+3)/2, exact when both coordinates are
/// odd; other specs get the one-sided bound from the Schubert estimate when
/// it is positive.
inline GenusBounds singular_genus_bounds(const SatelliteSpec& sat, const Slope& c) {
    GenusBounds bounds;
    if (is_plumbing(sat.twist) && sat.companion.genus.exact && sat.pattern.genus.exact) {
        const SeminormValue norm = plumbing_norm(sat, to_homology(c));
        if (norm.value.denominator() != 1)
            throw internal_error("plumbing norm of an integral class must be an integer");
        const Int n = norm.value.numerator();
        bounds.singular_lower = (n + 2) / 2;  // ceil((n+1)/2)
        bounds.singular_upper = (n + 3) / 2;  // floor((n+3)/2)
        const bool both_odd = (std::llabs(c.x) % 2 == 1) && (std::llabs(c.y) % 2 == 1);
        if (both_odd) {
            if (n % 2 != 0) throw internal_error("odd-odd slope must have even plumbing norm");
            bounds.singular_exact = n / 2 + 1;
        }
        return bounds;
    }
    const SeminormValue bound = schubert_lower_bound(sat, to_homology(c));
    if (bound.value > Rational(0)) {
        if (bound.value.denominator() != 1)
            throw internal_error("Schubert bound of an integral class must be an integer");
        const Int n = bound.value.numerator();
        bounds.singular_lower = (n + 2) / 2;  // ceil((n+1)/2)
    }
    return bounds;
}

/// Genus upper bound g|x| + g'|y| + (|x|-1)(|y|-1)/2 for plumbing satellites.
inline long long genus_upper_bound(const SatelliteSpec& sat, const Slope& c) {
    if (!is_plumbing(sat.twist))
        throw hypothesis_error(citation::prop_5_8,
                               "the genus upper bound applies to plumbing twists only");
    require_nontrivial(sat.companion, "companion");
    require_nontrivial(sat.pattern, "pattern");
    detail::require_exact_genus(sat.companion, "companion", citation::prop_5_8);
    detail::require_exact_genus(sat.pattern, "pattern", citation::prop_5_8);
    const Int ax = std::llabs(c.x);
    const Int ay = std::llabs(c.y);
    if ((ax - 1) * (ay - 1) % 2 != 0)
        throw internal_error("coprimality should force an even correction term");
    return sat.companion.genus.lower * ax + sat.pattern.genus.lower * ay +
           (ax - 1) * (ay - 1) / 2;
}

struct SlopeReport {
    Slope slope;
    std::optional<SeminormValue> norm;
    std::optional<std::string> norm_error;
    GenusBounds genus;
    std::optional<std::string> singular_error;
    std::optional<std::string> genus_upper_error;

    bool operator==(const SlopeReport&) const = default;
};

/// Aggregates the norm and genus data for one slope; hypotheses that fail
/// leave the field empty and record the reason. Never throws.
inline SlopeReport slope_report(const SatelliteSpec& sat, const Slope& c) {
    SlopeReport report;
    report.slope = c;
    try {
        if (is_plumbing(sat.twist) && sat.companion.genus.exact && sat.pattern.genus.exact)
            report.norm = plumbing_norm(sat, to_homology(c));
        else
            report.norm = schubert_lower_bound(sat, to_homology(c));
    } catch (const hypothesis_error& e) {
        report.norm_error = e.what();
    }
    try {
        report.genus = singular_genus_bounds(sat, c);
        if (!report.genus.singular_lower)
            report.singular_error =
                std::string(citation::lemma_4_9) + ": requires a positive seminorm lower bound";
    } catch (const hypothesis_error& e) {
        report.singular_error = e.what();
    }
    try {
        report.genus.genus_upper = genus_upper_bound(sat, c);
    } catch (const hypothesis_error& e) {
        report.genus_upper_error = e.what();
    }
    return report;
}

}  // namespace slopecalc
