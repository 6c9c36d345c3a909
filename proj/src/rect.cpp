#include <algorithm>
#include <cmath>

#include "movable/error.hpp"
#include "movable/shapes.hpp"
#include "shape_util.hpp"

namespace movable {

namespace {

// Corners in local order and the borders that meet there.
constexpr std::array<std::array<RectSide, 2>, 4> kCornerSides{{
    {RectSide::Left, RectSide::Bottom},
    {RectSide::Right, RectSide::Bottom},
    {RectSide::Right, RectSide::Top},
    {RectSide::Left, RectSide::Top},
}};

// Edge endpoints as corner indices, indexed by RectSide.
constexpr std::array<std::array<std::size_t, 2>, 4> kEdgeCorners{{{0, 3}, {1, 2}, {0, 1}, {3, 2}}};

}  // namespace

Rect::Rect(std::string id, Point center, double width, double height, RectPolicy policy)
    : MovableObject(std::move(id)), center_(center), width_(width), height_(height), policy_(policy) {}

void Rect::set_partitions(const std::vector<double>& offsets_from_left) {
    partitions_.clear();
    for (double off : offsets_from_left) partitions_.push_back(off / width_);
}

double Rect::partition_offset(std::size_t index) const { return partitions_.at(index) * width_; }

Point Rect::to_local(Point p) const {
    if (angle_ == 0.0) return p - center_;
    return rotate_about(p - center_, Point{}, -angle_);
}

Point Rect::to_world(Point local) const {
    if (angle_ == 0.0) return center_ + local;
    return center_ + rotate_about(local, Point{}, angle_);
}

std::array<Point, 4> Rect::corners() const {
    const double hw = width_ / 2.0;
    const double hh = height_ / 2.0;
    return {to_world({-hw, -hh}), to_world({hw, -hh}), to_world({hw, hh}), to_world({-hw, hh})};
}

bool Rect::handle_enabled(const Handle& h) const {
    switch (h.kind) {
        case HandleKind::Body:
            return true;
        case HandleKind::Partition:
            return h.index < partitions_.size();
        case HandleKind::Corner:
            return h.index < 4 && (policy_.mode == RectPolicy::Mode::Free ||
                                   policy_.mode == RectPolicy::Mode::Symmetric ||
                                   policy_.mode == RectPolicy::Mode::FixedRatio);
        case HandleKind::Edge:
            if (h.index >= 4) return false;
            if (policy_.mode == RectPolicy::Mode::SingleBorder) {
                return static_cast<RectSide>(h.index) == policy_.side;
            }
            return policy_.mode != RectPolicy::Mode::FixedRatio;
        default:
            return false;
    }
}

std::vector<CoverEntry> Rect::anatomy() const {
    const auto c = corners();
    CoverBuilder cb;
    for (std::size_t i = 0; i < 4; ++i) {
        if (handle_enabled({HandleKind::Corner, i})) {
            cb.circle(c[i], kHandleRadius, NodeBehavior::NodeMove, CursorHint::ResizeDiagonal,
                      {HandleKind::Corner, i});
        }
    }
    for (std::size_t side = 0; side < 4; ++side) {
        if (!handle_enabled({HandleKind::Edge, side})) continue;
        const Point a = c[kEdgeCorners[side][0]];
        const Point b = c[kEdgeCorners[side][1]];
        cb.strip(a, b, kBandHalfwidth, NodeBehavior::NodeMove, detail::edge_cursor(b - a),
                 {HandleKind::Edge, side});
    }
    const double hw = width_ / 2.0;
    const double hh = height_ / 2.0;
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        const double x = -hw + partition_offset(i);
        cb.strip(to_world({x, -hh}), to_world({x, hh}), kBandHalfwidth, NodeBehavior::NodeMove,
                 CursorHint::ResizeHorizontal, {HandleKind::Partition, i});
    }
    cb.polygon({c.begin(), c.end()}, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 0});
    return cb.take();
}

std::vector<Point> Rect::defining_points() const {
    const auto c = corners();
    return {c.begin(), c.end()};
}

Box Rect::bounds() const {
    const auto c = corners();
    return Box::of_points(c);
}

bool Rect::interior_contains(Point pt) const {
    const Point q = to_local(pt);
    return std::abs(q.x) <= std::abs(width_) / 2.0 && std::abs(q.y) <= std::abs(height_) / 2.0;
}

Footprint Rect::footprint() const {
    const auto c = corners();
    return {Piece::polygon({c.begin(), c.end()})};
}

std::vector<std::string> Rect::validate() const {
    auto issues = MovableObject::validate();
    if (!(width_ > 0.0) || !(height_ > 0.0)) issues.push_back(id() + ": rectangle sides must be positive");
    if (!std::isfinite(angle_) || angle_ < -kPi || angle_ >= kPi) issues.push_back(id() + ": angle not normalized");
    if (!(policy_.min_size.x > 0.0) || !(policy_.min_size.y > 0.0)) {
        issues.push_back(id() + ": clamp size must be positive");
    }
    if (policy_.mode == RectPolicy::Mode::FixedRatio) {
        if (!(policy_.ratio > 0.0)) {
            issues.push_back(id() + ": ratio must be positive");
        } else if (std::abs(width_ / height_ - policy_.ratio) > 1e-9 * policy_.ratio) {
            issues.push_back(id() + ": side ratio drifted from " + std::to_string(policy_.ratio));
        }
    }
    double prev = 0.0;
    for (double f : partitions_) {
        if (!(f > prev) || !(f < 1.0)) {
            issues.push_back(id() + ": partitions must increase strictly inside the rectangle");
            break;
        }
        prev = f;
    }
    return issues;
}

std::unique_ptr<MovableObject> Rect::clone() const { return std::make_unique<Rect>(*this); }

void Rect::do_translate(Vector d) { center_ += d; }

void Rect::do_rotate(Point pivot, double radians) {
    center_ = rotate_about(center_, pivot, radians);
    angle_ = normalize_angle(angle_ + radians);
}

Point Rect::handle_position(const Handle& h) const {
    const auto c = corners();
    if (h.kind == HandleKind::Corner) return c[h.index];
    if (h.kind == HandleKind::Edge) {
        return (c[kEdgeCorners[h.index][0]] + c[kEdgeCorners[h.index][1]]) / 2.0;
    }
    const double x = -width_ / 2.0 + partition_offset(h.index);
    return to_world({x, 0.0});
}

EditResult Rect::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    if (!handle_enabled(h) || h.kind == HandleKind::Body) return EditResult::Rejected;
    const Point target = handle_position(h) + (to - from);
    if (h.kind == HandleKind::Partition) {
        slide_partition(h.index, target);
        return EditResult::Applied;
    }
    return resize(h, target, ctx);
}

// Clamps one axis of a free resize: the side that moved gives way, the
// other stays put. Returns false when the axis collapses under Vanish.
static bool settle_axis(double& lo, double& hi, double old_lo, double min_size,
                        const std::optional<std::pair<double, double>>& limits, bool vanish, bool safe) {
    double size = hi - lo;
    if (vanish && size <= 0.0) return false;
    if (!vanish && safe) size = std::max(size, min_size);
    if (limits) size = std::clamp(size, limits->first, limits->second);
    if (lo != old_lo) {
        lo = hi - size;
    } else {
        hi = lo + size;
    }
    return true;
}

EditResult Rect::apply_extent(double left, double right, double bottom, double top, bool keep_center,
                              const EditContext& ctx) {
    const bool vanish = policy_.vanish == RectPolicy::Vanish::Vanish;
    const double hw = width_ / 2.0;
    const double hh = height_ / 2.0;
    std::optional<std::pair<double, double>> xlim, ylim;
    if (limits()) {
        xlim = std::pair{limits()->min_size.x, limits()->max_size.x};
        ylim = std::pair{limits()->min_size.y, limits()->max_size.y};
    }
    if (keep_center) {
        double w = right - left;
        double h = top - bottom;
        if (vanish && (w <= 0.0 || h <= 0.0)) return EditResult::Vanished;
        if (!vanish && ctx.safe) {
            w = std::max(w, policy_.min_size.x);
            h = std::max(h, policy_.min_size.y);
        }
        if (xlim) w = std::clamp(w, xlim->first, xlim->second);
        if (ylim) h = std::clamp(h, ylim->first, ylim->second);
        width_ = w;
        height_ = h;
        return EditResult::Applied;
    }
    if (!settle_axis(left, right, -hw, policy_.min_size.x, xlim, vanish, ctx.safe) ||
        !settle_axis(bottom, top, -hh, policy_.min_size.y, ylim, vanish, ctx.safe)) {
        return EditResult::Vanished;
    }
    const Point local_center{(left + right) / 2.0, (bottom + top) / 2.0};
    center_ = to_world(local_center);
    width_ = right - left;
    height_ = top - bottom;
    return EditResult::Applied;
}

EditResult Rect::resize(const Handle& h, Point pointer, const EditContext& ctx) {
    if (!handle_enabled(h) || (h.kind != HandleKind::Corner && h.kind != HandleKind::Edge)) {
        throw Error(ErrorCode::DisabledHandle, "handle not enabled on rectangle '" + id() + "'");
    }
    if (!is_finite(pointer)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    const Point q = to_local(pointer);
    const double hw = width_ / 2.0;
    const double hh = height_ / 2.0;

    if (policy_.mode == RectPolicy::Mode::FixedRatio) {
        const double ratio = policy_.ratio;
        const std::size_t i = h.index;
        const double sx = (i == 1 || i == 2) ? 1.0 : -1.0;
        const double sy = (i == 2 || i == 3) ? 1.0 : -1.0;
        const Point fixed{-sx * hw, -sy * hh};
        const Vector u{(q.x - fixed.x) * sx, (q.y - fixed.y) * sy};
        // Euclidean projection onto the ray fixed + t * (ratio, 1)
        double new_h = (u.x * ratio + u.y) / (ratio * ratio + 1.0);
        if (policy_.vanish == RectPolicy::Vanish::Vanish) {
            if (new_h <= 0.0) return EditResult::Vanished;
        } else if (ctx.safe) {
            new_h = std::max({new_h, policy_.min_size.y, policy_.min_size.x / ratio});
        }
        if (limits()) {
            const double lo = std::max(limits()->min_size.y, limits()->min_size.x / ratio);
            const double hi = std::min(limits()->max_size.y, limits()->max_size.x / ratio);
            if (lo <= hi) new_h = std::clamp(new_h, lo, hi);
        }
        const double new_w = ratio * new_h;
        const Point local_center{fixed.x + sx * new_w / 2.0, fixed.y + sy * new_h / 2.0};
        center_ = to_world(local_center);
        width_ = new_w;
        height_ = new_h;
        return EditResult::Applied;
    }

    if (policy_.mode == RectPolicy::Mode::Symmetric) {
        double nhw = hw;
        double nhh = hh;
        auto take = [&](RectSide side) {
            switch (side) {
                case RectSide::Left: nhw = -q.x; break;
                case RectSide::Right: nhw = q.x; break;
                case RectSide::Bottom: nhh = -q.y; break;
                case RectSide::Top: nhh = q.y; break;
            }
        };
        if (h.kind == HandleKind::Edge) {
            take(static_cast<RectSide>(h.index));
        } else {
            take(kCornerSides[h.index][0]);
            take(kCornerSides[h.index][1]);
        }
        return apply_extent(-nhw, nhw, -nhh, nhh, true, ctx);
    }

    double left = -hw, right = hw, bottom = -hh, top = hh;
    auto take = [&](RectSide side) {
        switch (side) {
            case RectSide::Left: left = q.x; break;
            case RectSide::Right: right = q.x; break;
            case RectSide::Bottom: bottom = q.y; break;
            case RectSide::Top: top = q.y; break;
        }
    };
    if (h.kind == HandleKind::Edge) {
        take(static_cast<RectSide>(h.index));
    } else {
        take(kCornerSides[h.index][0]);
        take(kCornerSides[h.index][1]);
    }
    return apply_extent(left, right, bottom, top, false, ctx);
}

void Rect::slide_partition(std::size_t index, Point pointer) {
    if (index >= partitions_.size()) throw Error(ErrorCode::InvalidGeometry, "no such partition");
    const double offset = to_local(pointer).x + width_ / 2.0;
    const double lo = (index == 0 ? 0.0 : partition_offset(index - 1)) + kMinGap;
    const double hi = (index + 1 == partitions_.size() ? width_ : partition_offset(index + 1)) - kMinGap;
    if (lo > hi) return;
    partitions_[index] = std::clamp(offset, lo, hi) / width_;
}

}  // namespace movable
