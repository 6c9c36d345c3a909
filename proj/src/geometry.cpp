#include "movable/geometry.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "movable/error.hpp"

namespace movable {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidGeometry: return "invalid-geometry";
        case ErrorCode::InsufficientCover: return "insufficient-cover";
        case ErrorCode::ProtocolViolation: return "protocol-violation";
        case ErrorCode::ImmovableObject: return "immovable-object";
        case ErrorCode::NotRotatable: return "not-rotatable";
        case ErrorCode::DisabledHandle: return "disabled-handle";
        case ErrorCode::DisabledPart: return "disabled-part";
        case ErrorCode::Vanished: return "vanished";
        case ErrorCode::DuplicateId: return "duplicate-id";
        case ErrorCode::UnknownId: return "unknown-id";
        case ErrorCode::MissingMember: return "missing-member";
        case ErrorCode::MalformedDocument: return "malformed-document";
        case ErrorCode::MalformedTrace: return "malformed-trace";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

std::optional<Vector> normalized(Vector v) {
    const double len = length(v);
    if (len == 0.0 || !std::isfinite(len)) return std::nullopt;
    return v / len;
}

double normalize_angle(double radians) {
    if (radians >= -kPi && radians < kPi) return radians;
    double a = std::fmod(radians + kPi, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    a -= kPi;
    // fmod can land exactly on the excluded end after rounding
    if (a >= kPi) a -= kTwoPi;
    return a;
}

double polar_angle(Point p, Point center) {
    return normalize_angle(std::atan2(p.y - center.y, p.x - center.x));
}

Point unit_at(double radians) { return {std::cos(radians), std::sin(radians)}; }

Point rotate_about(Point pt, Point center, double radians) {
    if (radians == 0.0) return pt;
    const double c = std::cos(radians);
    const double s = std::sin(radians);
    const Vector d = pt - center;
    return {center.x + d.x * c - d.y * s, center.y + d.x * s + d.y * c};
}

Point rotate_about(Point pt, Point center, Angle angle) {
    return rotate_about(pt, center, angle.radians());
}

Point closest_on_segment(Point pt, Point a, Point b) {
    const Vector ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return a;
    const double t = std::clamp(dot(pt - a, ab) / len2, 0.0, 1.0);
    return a + ab * t;
}

double segment_distance(Point pt, Point a, Point b) {
    if (a == b) throw Error(ErrorCode::InvalidGeometry, "segment endpoints coincide");
    return distance(pt, closest_on_segment(pt, a, b));
}

Box Box::empty() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {inf, inf, -inf, -inf};
}

Box Box::of_points(std::span<const Point> pts) {
    Box b = empty();
    for (const Point& p : pts) {
        b.min_x = std::min(b.min_x, p.x);
        b.min_y = std::min(b.min_y, p.y);
        b.max_x = std::max(b.max_x, p.x);
        b.max_y = std::max(b.max_y, p.y);
    }
    return b;
}

Box Box::united(const Box& b) const {
    if (is_empty()) return b;
    if (b.is_empty()) return *this;
    return {std::min(min_x, b.min_x), std::min(min_y, b.min_y), std::max(max_x, b.max_x),
            std::max(max_y, b.max_y)};
}

double signed_area(std::span<const Point> polygon) {
    double twice = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        twice += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
    }
    return twice / 2.0;
}

bool is_strictly_convex_ccw(std::span<const Point> polygon) {
    const std::size_t n = polygon.size();
    if (n < 3) return false;
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vector e1 = polygon[(i + 1) % n] - polygon[i];
        const Vector e2 = polygon[(i + 2) % n] - polygon[(i + 1) % n];
        const double c = cross(e1, e2);
        if (!(c > 0.0)) return false;
        turning += std::atan2(c, dot(e1, e2));
    }
    // a single winding turns by exactly 2pi; stars wind more
    return std::abs(turning - kTwoPi) < 1e-6;
}

bool is_strictly_convex(std::span<const Point> polygon) {
    if (is_strictly_convex_ccw(polygon)) return true;
    std::vector<Point> reversed(polygon.rbegin(), polygon.rend());
    return is_strictly_convex_ccw(reversed);
}

}  // namespace movable
