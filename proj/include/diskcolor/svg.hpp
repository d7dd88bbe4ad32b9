#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "diskcolor/coloring.hpp"
#include "diskcolor/realization.hpp"

namespace diskcolor {

// The only place floating point is allowed: exact rationals are rounded to
// 12 significant decimals for display.
namespace svg_detail {

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline const char* palette(int k) {
    static const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                   "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
    return colors[k % 8];
}

} // namespace svg_detail

struct SvgOptions {
    double scale = 200;  // user units per coordinate unit
    double margin = 0.2; // in coordinate units
};

// Renders points (colored when a coloring is given), circles, an optional
// dashed anchor circle and an optional origin marker. Output bytes are
// deterministic for a fixed input.
inline std::string render_svg(const std::vector<Point>& points,
                              const std::vector<Circle>& circles,
                              const Circle* anchor = nullptr, const Point* origin = nullptr,
                              const Coloring* coloring = nullptr, const SvgOptions& opt = {}) {
    using svg_detail::fmt;
    using svg_detail::to_double;

    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    bool first = true;
    auto stretch = [&](double x, double y, double r) {
        if (first) {
            minx = x - r;
            maxx = x + r;
            miny = y - r;
            maxy = y + r;
            first = false;
        } else {
            minx = std::min(minx, x - r);
            maxx = std::max(maxx, x + r);
            miny = std::min(miny, y - r);
            maxy = std::max(maxy, y + r);
        }
    };
    for (const auto& p : points) stretch(to_double(p.x), to_double(p.y), 0);
    auto circle_geom = [&](const Circle& c) {
        const double r = std::sqrt(to_double(c.radius_sq));
        return std::tuple<double, double, double>(to_double(c.center.x), to_double(c.center.y), r);
    };
    for (const auto& c : circles) {
        auto [x, y, r] = circle_geom(c);
        stretch(x, y, r);
    }
    if (anchor) {
        auto [x, y, r] = circle_geom(*anchor);
        stretch(x, y, r);
    }
    if (origin) stretch(to_double(origin->x), to_double(origin->y), 0);

    const double s = opt.scale;
    const double w = (maxx - minx + 2 * opt.margin) * s;
    const double h = (maxy - miny + 2 * opt.margin) * s;
    auto X = [&](double x) { return (x - minx + opt.margin) * s; };
    auto Y = [&](double y) { return (maxy - y + opt.margin) * s; }; // flip y

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
        << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
    if (anchor) {
        auto [x, y, r] = circle_geom(*anchor);
        out << "  <circle cx=\"" << fmt(X(x)) << "\" cy=\"" << fmt(Y(y)) << "\" r=\""
            << fmt(r * s) << "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"6 4\"/>\n";
    }
    for (const auto& c : circles) {
        auto [x, y, r] = circle_geom(c);
        out << "  <circle cx=\"" << fmt(X(x)) << "\" cy=\"" << fmt(Y(y)) << "\" r=\""
            << fmt(r * s) << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        const char* fill = coloring ? svg_detail::palette(coloring->colors.at(i)) : "#000000";
        out << "  <circle cx=\"" << fmt(X(to_double(points[i].x))) << "\" cy=\""
            << fmt(Y(to_double(points[i].y))) << "\" r=\"3.5\" fill=\"" << fill << "\"/>\n";
    }
    if (origin) {
        out << "  <path d=\"M " << fmt(X(to_double(origin->x)) - 5) << " "
            << fmt(Y(to_double(origin->y))) << " h 10 M " << fmt(X(to_double(origin->x))) << " "
            << fmt(Y(to_double(origin->y)) - 5) << " v 10\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace diskcolor
