#include "movable/error.hpp"
#include "movable/shapes.hpp"
#include "shape_util.hpp"

namespace movable {

namespace {

/// Joints closer than this collapse a segment.
constexpr double kMinSegment = 1.0;

}  // namespace

// SolitaryLine ---------------------------------------------------------------

SolitaryLine::SolitaryLine(std::string id, Point a, Point b) : MovableObject(std::move(id)), a_(a), b_(b) {}

std::vector<CoverEntry> SolitaryLine::anatomy() const {
    CoverBuilder cb;
    cb.circle(a_, kHandleRadius, NodeBehavior::NodeMove, CursorHint::ResizeDiagonal, {HandleKind::Vertex, 0});
    cb.circle(b_, kHandleRadius, NodeBehavior::NodeMove, CursorHint::ResizeDiagonal, {HandleKind::Vertex, 1});
    cb.strip(a_, b_, kBandHalfwidth, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 0});
    return cb.take();
}

Box SolitaryLine::bounds() const {
    const std::array<Point, 2> pts{a_, b_};
    return Box::of_points(pts).inflated(kLineHalfThickness);
}

bool SolitaryLine::interior_contains(Point pt) const {
    return distance(pt, closest_on_segment(pt, a_, b_)) <= kLineHalfThickness;
}

Footprint SolitaryLine::footprint() const { return {Piece::capsule(a_, b_, kLineHalfThickness)}; }

std::vector<std::string> SolitaryLine::validate() const {
    auto issues = MovableObject::validate();
    if (a_ == b_) issues.push_back(id() + ": line endpoints coincide");
    return issues;
}

std::unique_ptr<MovableObject> SolitaryLine::clone() const { return std::make_unique<SolitaryLine>(*this); }

void SolitaryLine::do_translate(Vector d) {
    a_ += d;
    b_ += d;
}

EditResult SolitaryLine::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    if (h.kind != HandleKind::Vertex || h.index > 1) return EditResult::Rejected;
    Point& end = h.index == 0 ? a_ : b_;
    const Point& other = h.index == 0 ? b_ : a_;
    const Point next = end + (to - from);
    if (ctx.safe && distance(next, other) < kMinSegment) return EditResult::Rejected;
    end = next;
    return EditResult::Applied;
}

void SolitaryLine::do_rotate(Point pivot, double radians) {
    a_ = rotate_about(a_, pivot, radians);
    b_ = rotate_about(b_, pivot, radians);
}

// SegmentedLine --------------------------------------------------------------

SegmentedLine::SegmentedLine(std::string id, std::vector<Point> points)
    : MovableObject(std::move(id)), points_(std::move(points)) {
    if (points_.size() < 2) throw Error(ErrorCode::InvalidGeometry, "segmented line needs two points");
}

std::vector<CoverEntry> SegmentedLine::anatomy() const {
    CoverBuilder cb;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        cb.circle(points_[i], kHandleRadius, NodeBehavior::NodeMove, CursorHint::ResizeDiagonal,
                  {HandleKind::Vertex, i});
    }
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        cb.strip(points_[i], points_[i + 1], kBandHalfwidth, NodeBehavior::WholeMove, CursorHint::Move,
                 {HandleKind::Body, i});
    }
    return cb.take();
}

Point SegmentedLine::rotation_center() const { return detail::mean_of(points_); }

Box SegmentedLine::bounds() const { return Box::of_points(points_).inflated(kLineHalfThickness); }

bool SegmentedLine::interior_contains(Point pt) const {
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        if (distance(pt, closest_on_segment(pt, points_[i], points_[i + 1])) <= kLineHalfThickness) {
            return true;
        }
    }
    return false;
}

Footprint SegmentedLine::footprint() const {
    Footprint fp;
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        fp.push_back(Piece::capsule(points_[i], points_[i + 1], kLineHalfThickness));
    }
    return fp;
}

std::vector<std::string> SegmentedLine::validate() const {
    auto issues = MovableObject::validate();
    if (points_.size() < 2) issues.push_back(id() + ": segmented line needs at least two points");
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
        if (points_[i] == points_[i + 1]) {
            issues.push_back(id() + ": segment " + std::to_string(i) + " has zero length");
        }
    }
    return issues;
}

std::unique_ptr<MovableObject> SegmentedLine::clone() const { return std::make_unique<SegmentedLine>(*this); }

EditResult SegmentedLine::reconfigure_vertex(std::size_t index, Point pointer, const EditContext& ctx) {
    if (index >= points_.size()) throw Error(ErrorCode::InvalidGeometry, "no such joint");
    if (ctx.safe) {
        if (index > 0 && distance(pointer, points_[index - 1]) < kMinSegment) return EditResult::Rejected;
        if (index + 1 < points_.size() && distance(pointer, points_[index + 1]) < kMinSegment) {
            return EditResult::Rejected;
        }
    }
    points_[index] = pointer;
    return EditResult::Applied;
}

void SegmentedLine::do_translate(Vector d) {
    for (Point& p : points_) p += d;
}

EditResult SegmentedLine::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    if (h.kind != HandleKind::Vertex || h.index >= points_.size()) return EditResult::Rejected;
    return reconfigure_vertex(h.index, points_[h.index] + (to - from), ctx);
}

void SegmentedLine::do_rotate(Point pivot, double radians) {
    for (Point& p : points_) p = rotate_about(p, pivot, radians);
}

}  // namespace movable
