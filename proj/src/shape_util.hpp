#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "movable/footprint.hpp"
#include "movable/geometry.hpp"
#include "movable/shapes.hpp"

namespace movable::detail {

/// How far a circumscribed polygon may stick out of its circle.
inline constexpr double kBodyExcess = 0.25;

/// Bands shrink on small radii so arc covers stay well formed.
inline double band_for(double radius) { return std::min(kBandHalfwidth, radius / 2.0); }

/// Band node count for a full circle: twice the gap-free minimum, which keeps
/// the band at least sqrt(3)/2 of its halfwidth deep everywhere.
inline std::size_t band_count(double radius, double band) {
    return std::max<std::size_t>(2 * min_arc_band_count(radius, band), 8);
}

/// Vertex count of a circumscribed polygon whose excess stays below kBodyExcess.
inline std::size_t body_segments(double radius) {
    const double half = std::acos(radius / (radius + kBodyExcess));
    const auto n = static_cast<std::size_t>(std::ceil(kPi / half));
    return std::clamp<std::size_t>(n, 16, 720);
}

/// Regular polygon around @p center whose edges are tangent to the circle.
inline std::vector<Point> circumscribed(Point center, double radius, std::size_t n) {
    const double r = radius / std::cos(kPi / static_cast<double>(n));
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(center + unit_at(kTwoPi * static_cast<double>(i) / static_cast<double>(n)) * r);
    }
    return pts;
}

/// Fan triangles covering the sector [start, start + sweep], circumscribed.
inline std::vector<std::array<Point, 3>> sector_fan(Point center, double radius, double start,
                                                    double sweep) {
    const double max_span = std::min(kPi / 16.0, 2.0 * std::acos(radius / (radius + kBodyExcess)));
    const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(sweep / max_span)));
    const double span = sweep / static_cast<double>(n);
    const double r = radius / std::cos(span / 2.0);
    std::vector<std::array<Point, 3>> fan;
    fan.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a0 = start + span * static_cast<double>(i);
        const double a1 = (i + 1 == n) ? start + sweep : a0 + span;
        fan.push_back({center, center + unit_at(a0) * r, center + unit_at(a1) * r});
    }
    return fan;
}

inline Point mean_of(const std::vector<Point>& pts) {
    Point sum;
    for (const Point& p : pts) sum += p;
    return sum / static_cast<double>(pts.size());
}

inline bool point_in_triangle(Point p, const std::array<Point, 3>& t) {
    const double d1 = cross(t[1] - t[0], p - t[0]);
    const double d2 = cross(t[2] - t[1], p - t[1]);
    const double d3 = cross(t[0] - t[2], p - t[2]);
    const bool has_neg = d1 < 0.0 || d2 < 0.0 || d3 < 0.0;
    const bool has_pos = d1 > 0.0 || d2 > 0.0 || d3 > 0.0;
    return !(has_neg && has_pos);
}

inline bool point_in_convex(Point p, const std::vector<Point>& poly) {
    const double area = signed_area(poly);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const double c = cross(poly[(i + 1) % poly.size()] - poly[i], p - poly[i]);
        if (area >= 0.0 ? c < 0.0 : c > 0.0) return false;
    }
    return true;
}

/// Uniform factor that moves a border point from @p before to @p pointer
/// around @p center; nullopt when either point is on the center.
inline std::optional<double> scale_factor(Point center, Point before, Point pointer) {
    const double d0 = distance(before, center);
    const double d1 = distance(pointer, center);
    if (d0 == 0.0 || d1 == 0.0) return std::nullopt;
    return d1 / d0;
}

/// Cursor hint for a strip along @p direction.
inline CursorHint edge_cursor(Vector direction) {
    return std::abs(direction.x) >= std::abs(direction.y) ? CursorHint::ResizeVertical
                                                          : CursorHint::ResizeHorizontal;
}

}  // namespace movable::detail
