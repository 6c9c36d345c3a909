#include <algorithm>
#include <cmath>

#include "movable/error.hpp"
#include "movable/shapes.hpp"
#include "shape_util.hpp"

namespace movable {

namespace {

/// Triangles thinner than this are dropped from chatoyant fans.
constexpr double kFlatTriangle = 1e-12;

/// Least distance of a convex vertex from the chord of its neighbors after
/// a safe drag. Rounding in later rotations cannot flatten such a corner.
constexpr double kConvexMargin = 1e-6;

bool convex_with_margin(const std::vector<Point>& v) {
    if (!is_strictly_convex_ccw(v)) return false;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % n];
        const Point c = v[(i + 2) % n];
        if (!(cross(b - a, c - b) >= kConvexMargin * distance(a, c))) return false;
    }
    return true;
}

}  // namespace

// RegularPolygon -------------------------------------------------------------

RegularPolygon::RegularPolygon(std::string id, Point center, double radius, std::size_t sides, double angle)
    : MovableObject(std::move(id)), center_(center), radius_(radius), sides_(sides), angle_(normalize_angle(angle)) {
    if (sides_ < 3) throw Error(ErrorCode::InvalidGeometry, "regular polygon needs three sides");
}

std::vector<Point> RegularPolygon::vertices() const {
    std::vector<Point> pts;
    pts.reserve(sides_);
    for (std::size_t i = 0; i < sides_; ++i) {
        pts.push_back(center_ + unit_at(angle_ + kTwoPi * static_cast<double>(i) / static_cast<double>(sides_)) *
                                    radius_);
    }
    return pts;
}

std::vector<CoverEntry> RegularPolygon::anatomy() const {
    CoverBuilder cb;
    const auto pts = vertices();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        cb.circle(pts[i], kHandleRadius, NodeBehavior::NodeMove, CursorHint::ResizeDiagonal, {HandleKind::Vertex, i});
    }
    cb.circle(center_, kHandleRadius, NodeBehavior::NodeMove, CursorHint::Move, {HandleKind::Center, 0});
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point a = pts[i];
        const Point b = pts[(i + 1) % pts.size()];
        cb.strip(a, b, kBandHalfwidth, NodeBehavior::NodeMove, detail::edge_cursor(b - a), {HandleKind::Edge, i});
    }
    cb.polygon(pts, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 0});
    return cb.take();
}

std::vector<Point> RegularPolygon::defining_points() const {
    auto pts = vertices();
    pts.insert(pts.begin(), center_);
    return pts;
}

Box RegularPolygon::bounds() const { return Box::of_points(vertices()); }

bool RegularPolygon::interior_contains(Point pt) const { return detail::point_in_convex(pt, vertices()); }

Footprint RegularPolygon::footprint() const { return {Piece::polygon(vertices())}; }

std::vector<std::string> RegularPolygon::validate() const {
    auto issues = MovableObject::validate();
    if (sides_ < 3) issues.push_back(id() + ": fewer than three sides");
    if (!(radius_ > 0.0) || !std::isfinite(radius_)) issues.push_back(id() + ": radius must be positive");
    if (!std::isfinite(angle_) || angle_ < -kPi || angle_ >= kPi) issues.push_back(id() + ": angle not normalized");
    return issues;
}

std::unique_ptr<MovableObject> RegularPolygon::clone() const { return std::make_unique<RegularPolygon>(*this); }

bool RegularPolygon::scale_uniform(Point before, Point pointer, const EditContext& ctx) {
    const auto f = detail::scale_factor(center_, before, pointer);
    if (!f) return false;
    double r = radius_ * *f;
    if (ctx.safe) r = std::max(r, kMinRadius);
    radius_ = clamp_radius_to_limits(r);
    return true;
}

void RegularPolygon::do_translate(Vector d) { center_ += d; }

EditResult RegularPolygon::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    if (h.kind == HandleKind::Center) {
        center_ += to - from;
        return EditResult::Applied;
    }
    if (h.kind == HandleKind::Edge) {
        return scale_uniform(from, to, ctx) ? EditResult::Applied : EditResult::Rejected;
    }
    if (h.kind != HandleKind::Vertex || h.index >= sides_) return EditResult::Rejected;
    const Point target = vertices()[h.index] + (to - from);
    double r = distance(target, center_);
    if (r == 0.0) return EditResult::Rejected;
    if (ctx.safe) r = std::max(r, kMinRadius);
    radius_ = clamp_radius_to_limits(r);
    angle_ = normalize_angle(polar_angle(target, center_) -
                             kTwoPi * static_cast<double>(h.index) / static_cast<double>(sides_));
    return EditResult::Applied;
}

void RegularPolygon::do_rotate(Point pivot, double radians) {
    center_ = rotate_about(center_, pivot, radians);
    angle_ = normalize_angle(angle_ + radians);
}

// ConvexPolygon --------------------------------------------------------------

ConvexPolygon::ConvexPolygon(std::string id, std::vector<Point> vertices)
    : MovableObject(std::move(id)), vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw Error(ErrorCode::InvalidGeometry, "convex polygon needs three vertices");
    if (signed_area(vertices_) < 0.0) std::reverse(vertices_.begin(), vertices_.end());
}

std::vector<CoverEntry> ConvexPolygon::anatomy() const {
    CoverBuilder cb;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        cb.circle(vertices_[i], kHandleRadius, NodeBehavior::NodeMove, CursorHint::ResizeDiagonal,
                  {HandleKind::Vertex, i});
    }
    cb.polygon(vertices_, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 0});
    return cb.take();
}

Point ConvexPolygon::rotation_center() const { return detail::mean_of(vertices_); }

Box ConvexPolygon::bounds() const { return Box::of_points(vertices_); }

bool ConvexPolygon::interior_contains(Point pt) const { return detail::point_in_convex(pt, vertices_); }

Footprint ConvexPolygon::footprint() const { return {Piece::polygon(vertices_)}; }

std::vector<std::string> ConvexPolygon::validate() const {
    auto issues = MovableObject::validate();
    if (vertices_.size() < 3 || !is_strictly_convex_ccw(vertices_)) {
        issues.push_back(id() + ": polygon is not strictly convex");
    }
    return issues;
}

std::unique_ptr<MovableObject> ConvexPolygon::clone() const { return std::make_unique<ConvexPolygon>(*this); }

EditResult ConvexPolygon::reconfigure_vertex(std::size_t index, Point pointer, const EditContext& ctx) {
    if (index >= vertices_.size()) throw Error(ErrorCode::InvalidGeometry, "no such vertex");
    if (!is_finite(pointer)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    if (!ctx.safe) {
        vertices_[index] = pointer;
        return EditResult::Applied;
    }
    const Point start = vertices_[index];
    auto trial = vertices_;
    // A polygon already inside the margin only has to stay strictly convex.
    const bool margin = convex_with_margin(vertices_);
    auto valid_at = [&](double t) {
        trial[index] = start + (pointer - start) * t;
        return margin ? convex_with_margin(trial) : is_strictly_convex_ccw(trial);
    };
    if (valid_at(1.0)) {
        vertices_[index] = pointer;
        return EditResult::Applied;
    }
    // Convexity constraints are half-planes in the moving vertex, so the
    // admissible part of the drag ray is an interval starting at t = 0.
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = (lo + hi) / 2.0;
        (valid_at(mid) ? lo : hi) = mid;
    }
    if (lo == 0.0) return EditResult::Rejected;
    vertices_[index] = start + (pointer - start) * lo;
    return EditResult::Applied;
}

bool ConvexPolygon::scale_uniform(Point before, Point pointer, const EditContext& ctx) {
    const Point c = rotation_center();
    const auto f = detail::scale_factor(c, before, pointer);
    if (!f) return false;
    double factor = *f;
    if (limits()) {
        const Box b = bounds();
        const Vector size{b.width() * factor, b.height() * factor};
        const Vector clamped = clamp_size_to_limits(size);
        if (clamped != size) {
            factor = std::min(clamped.x / b.width(), clamped.y / b.height());
        }
    }
    (void)ctx;
    for (Point& v : vertices_) v = c + (v - c) * factor;
    return true;
}

void ConvexPolygon::do_translate(Vector d) {
    for (Point& v : vertices_) v += d;
}

EditResult ConvexPolygon::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    if (h.kind != HandleKind::Vertex || h.index >= vertices_.size()) return EditResult::Rejected;
    return reconfigure_vertex(h.index, vertices_[h.index] + (to - from), ctx);
}

void ConvexPolygon::do_rotate(Point pivot, double radians) {
    for (Point& v : vertices_) v = rotate_about(v, pivot, radians);
}

// ChatoyantPolygon -----------------------------------------------------------

ChatoyantPolygon::ChatoyantPolygon(std::string id, Point center, std::vector<Point> vertices)
    : MovableObject(std::move(id)), center_(center), vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw Error(ErrorCode::InvalidGeometry, "chatoyant polygon needs three vertices");
}

std::vector<std::array<Point, 3>> ChatoyantPolygon::triangles() const {
    std::vector<std::array<Point, 3>> tris;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Point a = vertices_[i];
        const Point b = vertices_[(i + 1) % vertices_.size()];
        if (std::abs(cross(a - center_, b - center_)) > kFlatTriangle) tris.push_back({center_, a, b});
    }
    return tris;
}

std::vector<CoverEntry> ChatoyantPolygon::anatomy() const {
    CoverBuilder cb;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        cb.circle(vertices_[i], kHandleRadius, NodeBehavior::NodeMove, CursorHint::ResizeDiagonal,
                  {HandleKind::Vertex, i});
    }
    cb.circle(center_, kHandleRadius, NodeBehavior::NodeMove, CursorHint::Move, {HandleKind::Center, 0});
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Point a = vertices_[i];
        const Point b = vertices_[(i + 1) % vertices_.size()];
        cb.strip(a, b, kBandHalfwidth, NodeBehavior::NodeMove, detail::edge_cursor(b - a), {HandleKind::Edge, i});
    }
    for (const auto& tri : triangles()) {
        cb.polygon({tri.begin(), tri.end()}, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 0});
    }
    return cb.take();
}

std::vector<Point> ChatoyantPolygon::defining_points() const {
    std::vector<Point> pts{center_};
    pts.insert(pts.end(), vertices_.begin(), vertices_.end());
    return pts;
}

Box ChatoyantPolygon::bounds() const { return Box::of_points(defining_points()); }

bool ChatoyantPolygon::interior_contains(Point pt) const {
    for (const auto& tri : triangles()) {
        if (detail::point_in_triangle(pt, tri)) return true;
    }
    return false;
}

Footprint ChatoyantPolygon::footprint() const {
    Footprint fp;
    for (const auto& tri : triangles()) fp.push_back(Piece::polygon({tri.begin(), tri.end()}));
    return fp;
}

std::vector<std::string> ChatoyantPolygon::validate() const {
    auto issues = MovableObject::validate();
    if (vertices_.size() < 3) issues.push_back(id() + ": fewer than three vertices");
    if (triangles().empty()) issues.push_back(id() + ": every fan triangle is flat");
    return issues;
}

std::unique_ptr<MovableObject> ChatoyantPolygon::clone() const { return std::make_unique<ChatoyantPolygon>(*this); }

EditResult ChatoyantPolygon::reconfigure_vertex(std::size_t index, Point pointer) {
    if (index >= vertices_.size()) throw Error(ErrorCode::InvalidGeometry, "no such vertex");
    if (!is_finite(pointer)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    vertices_[index] = pointer;
    return EditResult::Applied;
}

void ChatoyantPolygon::move_center(Point pointer) {
    if (!is_finite(pointer)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    center_ = pointer;
}

bool ChatoyantPolygon::scale_uniform(Point before, Point pointer, const EditContext& ctx) {
    (void)ctx;
    const auto f = detail::scale_factor(center_, before, pointer);
    if (!f) return false;
    for (Point& v : vertices_) v = center_ + (v - center_) * *f;
    return true;
}

void ChatoyantPolygon::do_translate(Vector d) {
    center_ += d;
    for (Point& v : vertices_) v += d;
}

EditResult ChatoyantPolygon::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    if (h.kind == HandleKind::Edge) {
        return scale_uniform(from, to, ctx) ? EditResult::Applied : EditResult::Rejected;
    }
    if (h.kind == HandleKind::Center) {
        move_center(center_ + (to - from));
        return EditResult::Applied;
    }
    if (h.kind != HandleKind::Vertex || h.index >= vertices_.size()) return EditResult::Rejected;
    return reconfigure_vertex(h.index, vertices_[h.index] + (to - from));
}

void ChatoyantPolygon::do_rotate(Point pivot, double radians) {
    center_ = rotate_about(center_, pivot, radians);
    for (Point& v : vertices_) v = rotate_about(v, pivot, radians);
}

}  // namespace movable
