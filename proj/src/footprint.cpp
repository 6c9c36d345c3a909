#include "movable/footprint.hpp"

#include <algorithm>
#include <limits>

namespace movable {

namespace {

struct Closest {
    double distance = std::numeric_limits<double>::infinity();
    Point on_a;
    Point on_b;
};

std::vector<std::pair<Point, Point>> edges_of(const std::vector<Point>& hull) {
    std::vector<std::pair<Point, Point>> edges;
    if (hull.size() == 2) {
        edges.emplace_back(hull[0], hull[1]);
    } else if (hull.size() >= 3) {
        for (std::size_t i = 0; i < hull.size(); ++i) {
            edges.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
        }
    }
    return edges;
}

bool point_in_hull(Point p, const std::vector<Point>& hull) {
    if (hull.size() == 1) return p == hull[0];
    if (hull.size() == 2) return distance(p, closest_on_segment(p, hull[0], hull[1])) == 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point a = hull[i];
        const Point b = hull[(i + 1) % hull.size()];
        if (cross(b - a, p - a) < 0.0) return false;
    }
    return true;
}

int orientation(Point a, Point b, Point c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point a, Point b, Point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

bool hulls_intersect(const std::vector<Point>& a, const std::vector<Point>& b) {
    for (const Point& p : a) {
        if (point_in_hull(p, b)) return true;
    }
    for (const Point& p : b) {
        if (point_in_hull(p, a)) return true;
    }
    for (const auto& [a1, a2] : edges_of(a)) {
        for (const auto& [b1, b2] : edges_of(b)) {
            if (segments_intersect(a1, a2, b1, b2)) return true;
        }
    }
    return false;
}

void consider_vertices(const std::vector<Point>& from, const std::vector<Point>& to, bool swapped,
                       Closest& best) {
    const auto edges = edges_of(to);
    for (const Point& p : from) {
        if (edges.empty()) {
            const double d = distance(p, to[0]);
            if (d < best.distance) best = swapped ? Closest{d, to[0], p} : Closest{d, p, to[0]};
            continue;
        }
        for (const auto& [e1, e2] : edges) {
            const Point q = closest_on_segment(p, e1, e2);
            const double d = distance(p, q);
            if (d < best.distance) best = swapped ? Closest{d, q, p} : Closest{d, p, q};
        }
    }
}

Closest closest_points(const std::vector<Point>& a, const std::vector<Point>& b) {
    Closest best;
    consider_vertices(a, b, false, best);
    consider_vertices(b, a, true, best);
    return best;
}

Point centroid(const std::vector<Point>& hull) {
    Point sum;
    for (const Point& p : hull) sum += p;
    return sum / static_cast<double>(hull.size());
}

std::vector<Vector> sat_axes(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<Vector> axes;
    for (const auto* hull : {&a, &b}) {
        for (const auto& [e1, e2] : edges_of(*hull)) {
            if (auto n = normalized(perpendicular(e2 - e1))) axes.push_back(*n);
            if (hull->size() == 2) {
                if (auto d = normalized(e2 - e1)) axes.push_back(*d);
            }
        }
    }
    return axes;
}

// Smallest interval overlap over the candidate axes; the axis is oriented
// from b toward a.
std::pair<double, Vector> penetration(const std::vector<Point>& a, const std::vector<Point>& b) {
    double best = std::numeric_limits<double>::infinity();
    Vector best_axis{1.0, 0.0};
    const Vector ab = centroid(a) - centroid(b);
    for (Vector axis : sat_axes(a, b)) {
        double min_a = std::numeric_limits<double>::infinity(), max_a = -min_a;
        double min_b = min_a, max_b = -min_a;
        for (const Point& p : a) {
            min_a = std::min(min_a, dot(p, axis));
            max_a = std::max(max_a, dot(p, axis));
        }
        for (const Point& p : b) {
            min_b = std::min(min_b, dot(p, axis));
            max_b = std::max(max_b, dot(p, axis));
        }
        const double overlap = std::min(max_a, max_b) - std::max(min_a, min_b);
        if (overlap < best) {
            best = overlap;
            best_axis = dot(axis, ab) >= 0.0 ? axis : -axis;
        }
    }
    if (!std::isfinite(best)) return {0.0, normalized(ab).value_or(Vector{1.0, 0.0})};
    return {std::max(best, 0.0), best_axis};
}

}  // namespace

Piece Piece::polygon(std::vector<Point> pts) {
    if (pts.size() >= 3 && signed_area(pts) < 0.0) std::reverse(pts.begin(), pts.end());
    return {std::move(pts), 0.0};
}

Piece Piece::hull_of(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return {std::move(pts), 0.0};
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return {std::move(hull), 0.0};
}

Piece Piece::translated(Vector d) const {
    Piece out = *this;
    for (Point& p : out.hull) p += d;
    return out;
}

Box Piece::bounds() const { return Box::of_points(hull).inflated(radius); }

Footprint translated(const Footprint& fp, Vector d) {
    Footprint out;
    out.reserve(fp.size());
    for (const Piece& p : fp) out.push_back(p.translated(d));
    return out;
}

Box bounds(const Footprint& fp) {
    Box b = Box::empty();
    for (const Piece& p : fp) b = b.united(p.bounds());
    return b;
}

double separation(const Piece& a, const Piece& b) {
    if (hulls_intersect(a.hull, b.hull)) {
        return -penetration(a.hull, b.hull).first - a.radius - b.radius;
    }
    return closest_points(a.hull, b.hull).distance - a.radius - b.radius;
}

bool interior_overlap(const Piece& a, const Piece& b) {
    const Box ba = a.bounds();
    const Box bb = b.bounds();
    if (ba.max_x <= bb.min_x || bb.max_x <= ba.min_x || ba.max_y <= bb.min_y || bb.max_y <= ba.min_y) {
        return false;
    }
    return separation(a, b) < -kOverlapTolerance;
}

bool interior_overlap(const Footprint& a, const Footprint& b) {
    for (const Piece& pa : a) {
        for (const Piece& pb : b) {
            if (interior_overlap(pa, pb)) return true;
        }
    }
    return false;
}

Vector contact_normal(const Piece& a, const Piece& b) {
    if (!hulls_intersect(a.hull, b.hull)) {
        const Closest c = closest_points(a.hull, b.hull);
        if (auto n = normalized(c.on_a - c.on_b)) return *n;
    }
    return penetration(a.hull, b.hull).second;
}

}  // namespace movable
