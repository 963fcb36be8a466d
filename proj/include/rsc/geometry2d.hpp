#pragma once

#include "rsc/rational.hpp"

#include <array>
#include <vector>

namespace rsc {

using Point2 = std::array<Rational, 2>;
using Polygon2 = std::vector<Point2>;

/// Axis-aligned box (0,0)-(x,y) as a CCW polygon.
inline Polygon2 box_polygon(const Rational& x, const Rational& y) {
    return {{Rational(0), Rational(0)}, {x, Rational(0)}, {x, y}, {Rational(0), y}};
}

/// Sutherland-Hodgman clip of a convex CCW polygon against the halfplane
/// a*x + b*y <= c (or >= c when keep_leq is false). Exact arithmetic; points
/// on the line are kept.
inline Polygon2 clip_halfplane(const Polygon2& poly, const Rational& a, const Rational& b,
                               const Rational& c, bool keep_leq = true) {
    Polygon2 out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    // Explicit return type: gmpxx expression templates must not escape the
    // lambda, they reference temporaries.
    auto value = [&](const Point2& p) -> Rational { return a * p[0] + b * p[1]; };
    auto inside = [&](const Rational& v) { return keep_leq ? v <= c : v >= c; };
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % n];
        const Rational vp = value(p), vq = value(q);
        const bool ip = inside(vp), iq = inside(vq);
        if (ip && iq) {
            out.push_back(q);
        } else if (ip || iq) {
            const Rational t = (c - vp) / (vq - vp);
            Point2 x{p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
            out.push_back(x);
            if (iq) out.push_back(q);
        }
    }
    return out;
}

/// Removes repeated and collinear vertices and rotates the polygon so it
/// starts at its lexicographically smallest vertex. Orientation preserved.
inline Polygon2 canonical_polygon(Polygon2 poly) {
    // Consecutive duplicates (cyclically).
    Polygon2 dedup;
    for (const auto& p : poly)
        if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    // Collinear middle points.
    bool changed = true;
    while (changed && dedup.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < dedup.size(); ++i) {
            const Point2& a = dedup[(i + dedup.size() - 1) % dedup.size()];
            const Point2& b = dedup[i];
            const Point2& c = dedup[(i + 1) % dedup.size()];
            Rational cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
            if (cross == 0) {
                dedup.erase(dedup.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (dedup.empty()) return dedup;
    std::size_t best = 0;
    for (std::size_t i = 1; i < dedup.size(); ++i) {
        if (dedup[i][0] < dedup[best][0] ||
            (dedup[i][0] == dedup[best][0] && dedup[i][1] < dedup[best][1]))
            best = i;
    }
    Polygon2 rotated;
    for (std::size_t i = 0; i < dedup.size(); ++i)
        rotated.push_back(dedup[(best + i) % dedup.size()]);
    return rotated;
}

} // namespace rsc
