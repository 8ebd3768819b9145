// Exact rational arithmetic. All norm values in this library are stored as
// exact rationals; boost::rational keeps them reduced with positive
// denominators.

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

#include "slopecalc/errors.hpp"

namespace slopecalc {

using Int = long long;
using Rational = boost::rational<Int>;

inline Rational rational_abs(const Rational& r) { return r < Rational(0) ? -r : r; }

// Canonical text form: "p/q", with "/q" omitted when q == 1.
inline std::string to_string(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        s += "/";
        s += std::to_string(r.denominator());
    }
    return s;
}

inline Rational parse_rational(const std::string& text) {
    try {
        std::size_t pos = 0;
        const Int num = std::stoll(text, &pos);
        if (pos == text.size()) return Rational(num);
        if (text[pos] != '/') throw parse_error("invalid rational '" + text + "'");
        std::size_t pos2 = 0;
        const std::string den_part = text.substr(pos + 1);
        const Int den = std::stoll(den_part, &pos2);
        if (pos2 != den_part.size() || den == 0)
            throw parse_error("invalid rational '" + text + "'");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("invalid rational '" + text + "'");
    } catch (const std::out_of_range&) {
        throw parse_error("rational out of range '" + text + "'");
    }
}

}  // namespace slopecalc
