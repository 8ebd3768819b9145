// Exact SL(2,Z) algebra on the torus: slopes, homology classes, mapping
// classes, the intersection form and Dehn twists.
//
// Conventions: column vectors in the basis xi = [S^1 x pt], eta = [pt x S^1];
// a mapping class acts on the left, and compose(a, b) applies b first. A
// slope is an unoriented primitive class stored with the canonical sign
// x > 0, or x = 0 and y = 1.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "slopecalc/errors.hpp"
#include "slopecalc/rational.hpp"

namespace slopecalc {

struct Slope {
    Int x = 1;
    Int y = 0;

    bool operator==(const Slope&) const = default;
    auto operator<=>(const Slope&) const = default;

    std::string to_string() const { return std::to_string(x) + "/" + std::to_string(y); }
};

inline Slope make_slope(Int x, Int y) {
    if (x == 0 && y == 0) throw parse_error("slope (0,0) is not a homology class of a curve");
    const Int g = std::gcd(std::llabs(x), std::llabs(y));
    x /= g;
    y /= g;
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return Slope{x, y};
}

/// Accepts "x/y" or "x y".
inline Slope parse_slope(const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == '/') c = ' ';
    std::istringstream in(normalized);
    Int x = 0, y = 0;
    if (!(in >> x >> y)) throw parse_error("invalid slope '" + text + "'");
    std::string rest;
    if (in >> rest) throw parse_error("invalid slope '" + text + "'");
    return make_slope(x, y);
}

struct HomologyClass {
    Rational x{0};
    Rational y{0};

    bool operator==(const HomologyClass&) const = default;
};

inline HomologyClass to_homology(const Slope& c) { return HomologyClass{Rational(c.x), Rational(c.y)}; }

inline Rational intersection_form(const HomologyClass& a, const HomologyClass& b) {
    return a.x * b.y - a.y * b.x;
}

struct MappingClass {
    Int p = 1, q = 0, r = 0, s = 1;  // matrix [[p, q], [r, s]]

    bool operator==(const MappingClass&) const = default;

    std::string to_string() const {
        return std::to_string(p) + " " + std::to_string(q) + " " + std::to_string(r) + " " +
               std::to_string(s);
    }
};

inline MappingClass make_mapping_class(Int p, Int q, Int r, Int s) {
    if (p * s - q * r != 1)
        throw parse_error("matrix [[" + std::to_string(p) + "," + std::to_string(q) + "],[" +
                          std::to_string(r) + "," + std::to_string(s) + "]] is not in SL(2,Z)");
    return MappingClass{p, q, r, s};
}

/// Parses the row-major text form "p q r s".
inline MappingClass parse_mapping_class(const std::string& text) {
    std::istringstream in(text);
    Int p, q, r, s;
    if (!(in >> p >> q >> r >> s)) throw parse_error("invalid mapping class '" + text + "'");
    std::string rest;
    if (in >> rest) throw parse_error("invalid mapping class '" + text + "'");
    return make_mapping_class(p, q, r, s);
}

inline MappingClass identity_mapping_class() { return MappingClass{1, 0, 0, 1}; }

/// The plumbing twist: xi -> eta, eta -> -xi.
inline MappingClass plumbing_twist() { return MappingClass{0, -1, 1, 0}; }

/// compose(a, b) applies b first, then a (matrix product a * b).
inline MappingClass compose(const MappingClass& a, const MappingClass& b) {
    return MappingClass{a.p * b.p + a.q * b.r, a.p * b.q + a.q * b.s,
                        a.r * b.p + a.s * b.r, a.r * b.q + a.s * b.s};
}

inline MappingClass inverse(const MappingClass& m) { return MappingClass{m.s, -m.q, -m.r, m.p}; }

inline HomologyClass apply(const MappingClass& m, const HomologyClass& v) {
    return HomologyClass{Rational(m.p) * v.x + Rational(m.q) * v.y,
                         Rational(m.r) * v.x + Rational(m.s) * v.y};
}

inline Slope act_on_slope(const MappingClass& m, const Slope& c) {
    const Int x = m.p * c.x + m.q * c.y;
    const Int y = m.r * c.x + m.s * c.y;
    if (std::gcd(std::llabs(x), std::llabs(y)) != 1)
        throw internal_error("unimodular action lost primitivity");
    return make_slope(x, y);
}

/// Dehn twist along c: alpha -> alpha + I(c, alpha) * c. Independent of the
/// sign of c.
inline MappingClass dehn_twist(const Slope& c) {
    return MappingClass{1 - c.x * c.y, c.x * c.x, -c.y * c.y, 1 + c.x * c.y};
}

inline bool fixes_xi_up_to_sign(const MappingClass& m) { return m.r == 0; }

inline bool is_plumbing(const MappingClass& m) { return m == plumbing_twist(); }

/// Finite order of the mapping class when it is torsion (1, 2, 3, 4 or 6),
/// computed by explicit powering.
inline std::optional<int> torsion_order(const MappingClass& m) {
    MappingClass power = m;
    for (int k = 1; k <= 6; ++k) {
        if (power == identity_mapping_class()) return k;
        power = compose(power, m);
    }
    return std::nullopt;
}

/// Canonical primitive slopes with max(|x|,|y|) <= n, ordered by
/// (max(|x|,|y|), x, y).
inline std::vector<Slope> primitive_slopes_up_to(Int n) {
    if (n < 1) throw parse_error("N >= 1 required");
    std::vector<Slope> slopes;
    slopes.push_back(Slope{0, 1});
    for (Int x = 1; x <= n; ++x)
        for (Int y = -n; y <= n; ++y)
            if (std::gcd(x, std::llabs(y)) == 1) slopes.push_back(Slope{x, y});
    std::sort(slopes.begin(), slopes.end(), [](const Slope& a, const Slope& b) {
        const Int ma = std::max(std::llabs(a.x), std::llabs(a.y));
        const Int mb = std::max(std::llabs(b.x), std::llabs(b.y));
        if (ma != mb) return ma < mb;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    return slopes;
}

}  // namespace slopecalc
