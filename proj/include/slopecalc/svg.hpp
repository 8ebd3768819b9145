// Static SVG rendering of seminorm unit balls: axis lines, the ball polygon
// and exact rational vertex labels.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "slopecalc/errors.hpp"
#include "slopecalc/satellite.hpp"

namespace slopecalc {

namespace svg_detail {

inline std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace svg_detail

inline void write_unit_ball_svg(const UnitBallResult& ball, std::ostream& out) {
    if (ball.kind == UnitBallKind::Degenerate)
        throw hypothesis_error(citation::lemma_4_9,
                               "unit ball is unbounded; the seminorm lower bound vanishes on "
                               "slope " + std::to_string(ball.null_direction->x) + "/" +
                                   std::to_string(ball.null_direction->y));
    const double size = 420.0;
    const double center = size / 2.0;
    double extent = 0.0;
    for (const RationalPoint& v : ball.vertices) {
        extent = std::max(extent, std::abs(boost::rational_cast<double>(v.x)));
        extent = std::max(extent, std::abs(boost::rational_cast<double>(v.y)));
    }
    if (extent == 0.0) extent = 1.0;
    const double scale = (size / 2.0 - 50.0) / extent;
    const auto sx = [&](double x) { return center + scale * x; };
    const auto sy = [&](double y) { return center - scale * y; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "  <line x1=\"0\" y1=\"" << center << "\" x2=\"" << size << "\" y2=\"" << center
        << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    out << "  <line x1=\"" << center << "\" y1=\"0\" x2=\"" << center << "\" y2=\"" << size
        << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";

    std::string path;
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
        const double x = boost::rational_cast<double>(ball.vertices[i].x);
        const double y = boost::rational_cast<double>(ball.vertices[i].y);
        path += (i == 0 ? "M " : "L ") + svg_detail::fixed(sx(x)) + " " +
                svg_detail::fixed(sy(y)) + " ";
    }
    path += "Z";
    const char* fill = ball.kind == UnitBallKind::ExactBall ? "#7aa6d633" : "#d69a7a33";
    out << "  <path d=\"" << path << "\" fill=\"" << fill
        << "\" stroke=\"#33506e\" stroke-width=\"2\"/>\n";

    for (const RationalPoint& v : ball.vertices) {
        const double x = boost::rational_cast<double>(v.x);
        const double y = boost::rational_cast<double>(v.y);
        out << "  <circle cx=\"" << svg_detail::fixed(sx(x)) << "\" cy=\""
            << svg_detail::fixed(sy(y)) << "\" r=\"3\" fill=\"#33506e\"/>\n";
        out << "  <text x=\"" << svg_detail::fixed(sx(x) + 6) << "\" y=\""
            << svg_detail::fixed(sy(y) - 6) << "\" font-size=\"13\" font-family=\"monospace\">("
            << to_string(v.x) << ", " << to_string(v.y) << ")</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace slopecalc
