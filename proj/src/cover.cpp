#include "movable/cover.hpp"

#include <cmath>
#include <string>

#include "movable/error.hpp"

namespace movable {

namespace {

bool polygon_contains(const PolygonShape& poly, Point pt) {
    const auto& v = poly.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % v.size()];
        const Vector edge = b - a;
        // cross / |edge| is the signed distance to the edge line
        if (cross(edge, pt - a) < -kContainTolerance * length(edge)) return false;
    }
    return true;
}

}  // namespace

void check_node(const CoverNode& node) {
    std::visit(
        [](const auto& shape) {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, CircleShape>) {
                if (!is_finite(shape.center) || !(shape.radius > 0.0) || !std::isfinite(shape.radius)) {
                    throw Error(ErrorCode::InvalidGeometry, "circle node needs a finite positive radius");
                }
            } else if constexpr (std::is_same_v<T, PolygonShape>) {
                for (const Point& p : shape.vertices) {
                    if (!is_finite(p)) throw Error(ErrorCode::InvalidGeometry, "non-finite polygon vertex");
                }
                if (!is_strictly_convex_ccw(shape.vertices)) {
                    throw Error(ErrorCode::InvalidGeometry,
                                "polygon node must be strictly convex and counterclockwise");
                }
            } else {
                if (!is_finite(shape.a) || !is_finite(shape.b) || shape.a == shape.b) {
                    throw Error(ErrorCode::InvalidGeometry, "strip endpoints must be distinct");
                }
                if (!(shape.halfwidth > 0.0) || !std::isfinite(shape.halfwidth)) {
                    throw Error(ErrorCode::InvalidGeometry, "strip halfwidth must be positive");
                }
            }
        },
        node.shape);
}

bool is_valid_node(const CoverNode& node) {
    try {
        check_node(node);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool contains(const CoverNode& node, Point pt) {
    return std::visit(
        [pt](const auto& shape) -> bool {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, CircleShape>) {
                return distance(pt, shape.center) <= shape.radius + kContainTolerance;
            } else if constexpr (std::is_same_v<T, PolygonShape>) {
                return polygon_contains(shape, pt);
            } else {
                return distance(pt, closest_on_segment(pt, shape.a, shape.b)) <=
                       shape.halfwidth + kContainTolerance;
            }
        },
        node.shape);
}

std::optional<HitInfo> hit(const Cover& cover, Point pt) {
    for (std::size_t i = 0; i < cover.nodes.size(); ++i) {
        const CoverNode& node = cover.nodes[i];
        if (contains(node, pt)) return HitInfo{i, node.behavior, node.cursor};
    }
    return std::nullopt;
}

std::size_t min_arc_band_count(double radius, double band) {
    return static_cast<std::size_t>(std::ceil(kPi * radius / band));
}

std::vector<CoverNode> arc_band_nodes(Point center, double radius, double band, std::size_t n,
                                      NodeBehavior behavior, CursorHint cursor) {
    if (!(band > 0.0) || !(radius > band)) {
        throw Error(ErrorCode::InvalidGeometry, "arc band needs radius > band > 0");
    }
    if (n < 3 || static_cast<double>(n) < kPi * radius / band) {
        throw Error(ErrorCode::InsufficientCover,
                    std::to_string(n) + " nodes leave gaps on a circle of radius " +
                        std::to_string(radius) + " with band " + std::to_string(band));
    }
    std::vector<CoverNode> nodes;
    nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        nodes.push_back({CircleShape{center + unit_at(a) * radius, band}, behavior, cursor});
    }
    return nodes;
}

std::vector<CoverNode> arc_segment_nodes(Point center, double radius, double band, double start,
                                         double sweep, NodeBehavior behavior, CursorHint cursor) {
    if (!(band > 0.0) || !(radius > 0.0) || !(sweep > 0.0)) {
        throw Error(ErrorCode::InvalidGeometry, "arc segment needs positive radius, band and sweep");
    }
    const auto steps = static_cast<std::size_t>(std::ceil(sweep * radius / band));
    const std::size_t n = std::max<std::size_t>(steps, 1) + 1;
    std::vector<CoverNode> nodes;
    nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = start + sweep * static_cast<double>(i) / static_cast<double>(n - 1);
        nodes.push_back({CircleShape{center + unit_at(a) * radius, band}, behavior, cursor});
    }
    return nodes;
}

}  // namespace movable
