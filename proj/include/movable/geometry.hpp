#pragma once
/**
 * @file geometry.hpp
 * @brief Scene-space primitives: points, angles, boxes and the handful of
 * formulas every cover and shape is built from.
 *
 * Scene coordinates are real-valued with the y axis pointing up, so angles
 * are measured counterclockwise from the positive x axis.
 */

#include <cmath>
#include <numbers>
#include <optional>
#include <span>

namespace movable {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
    double x = 0.0;
    double y = 0.0;

    constexpr Point operator+(Point r) const { return {x + r.x, y + r.y}; }
    constexpr Point operator-(Point r) const { return {x - r.x, y - r.y}; }
    constexpr Point operator*(double s) const { return {x * s, y * s}; }
    constexpr Point operator/(double s) const { return {x / s, y / s}; }
    constexpr Point operator-() const { return {-x, -y}; }
    constexpr Point& operator+=(Point r) {
        x += r.x;
        y += r.y;
        return *this;
    }
    constexpr Point& operator-=(Point r) {
        x -= r.x;
        y -= r.y;
        return *this;
    }

    friend constexpr bool operator==(const Point&, const Point&) = default;
};

/// Displacements share the representation of points.
using Vector = Point;

constexpr Point operator*(double s, Point p) { return p * s; }

constexpr double dot(Vector a, Vector b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vector a, Vector b) { return a.x * b.y - a.y * b.x; }
inline double length(Vector v) { return std::hypot(v.x, v.y); }
inline double distance(Point a, Point b) { return length(b - a); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }
constexpr Vector perpendicular(Vector v) { return {-v.y, v.x}; }

/// Unit vector, or nullopt for a zero vector.
std::optional<Vector> normalized(Vector v);

/// Maps any finite angle into [-pi, pi).
double normalize_angle(double radians);

/// Counterclockwise angle in radians, always normalized to [-pi, pi).
class Angle {
public:
    constexpr Angle() = default;
    explicit Angle(double radians) : radians_(normalize_angle(radians)) {}

    double radians() const { return radians_; }

    friend bool operator==(const Angle&, const Angle&) = default;

private:
    double radians_ = 0.0;
};

/// Polar angle of @p p around @p center, in [-pi, pi).
double polar_angle(Point p, Point center);

Point unit_at(double radians);

/// Counterclockwise rotation of @p pt about @p center.
Point rotate_about(Point pt, Point center, Angle angle);
Point rotate_about(Point pt, Point center, double radians);

/// Euclidean distance from @p pt to the closed segment ab. Throws
/// InvalidGeometry when a == b.
double segment_distance(Point pt, Point a, Point b);

/// Nearest point of the segment ab to @p pt (a == b is allowed here).
Point closest_on_segment(Point pt, Point a, Point b);

/// Axis-aligned box; an empty box has min > max.
struct Box {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    static Box empty();
    static Box of_point(Point p) { return {p.x, p.y, p.x, p.y}; }
    static Box of_points(std::span<const Point> pts);

    bool is_empty() const { return min_x > max_x || min_y > max_y; }
    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
    Point center() const { return {(min_x + max_x) / 2.0, (min_y + max_y) / 2.0}; }
    bool contains(Point p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
    /// Closed boxes: touching counts.
    bool intersects(const Box& b) const {
        return min_x <= b.max_x && b.min_x <= max_x && min_y <= b.max_y && b.min_y <= max_y;
    }
    bool contains(const Box& b) const {
        return b.min_x >= min_x && b.max_x <= max_x && b.min_y >= min_y && b.max_y <= max_y;
    }
    Box united(const Box& b) const;
    Box inflated(double left, double bottom, double right, double top) const {
        return {min_x - left, min_y - bottom, max_x + right, max_y + top};
    }
    Box inflated(double margin) const { return inflated(margin, margin, margin, margin); }
    Box translated(Vector d) const { return {min_x + d.x, min_y + d.y, max_x + d.x, max_y + d.y}; }

    friend bool operator==(const Box&, const Box&) = default;
};

/// Signed area (positive for counterclockwise order).
double signed_area(std::span<const Point> polygon);

/// True when every turn is strictly left (counterclockwise) and the polygon
/// winds once.
bool is_strictly_convex_ccw(std::span<const Point> polygon);

/// True when the polygon is strictly convex in either orientation.
bool is_strictly_convex(std::span<const Point> polygon);

}  // namespace movable
