#include <algorithm>
#include <cmath>

#include "movable/error.hpp"
#include "movable/shapes.hpp"
#include "shape_util.hpp"

namespace movable {

namespace {

/// Angle in [0, 2pi) measured counterclockwise from @p from.
double ccw_offset(double angle, double from) {
    double off = std::fmod(angle - from, kTwoPi);
    if (off < 0.0) off += kTwoPi;
    if (off >= kTwoPi) off = 0.0;
    return off;
}

/// Trapezoids between the inner circle (chords) and a circumscribed outer polygon.
std::vector<std::vector<Point>> annulus_pieces(Point center, double r_in, double r_out, std::size_t n) {
    const double ro = r_out / std::cos(kPi / static_cast<double>(n));
    std::vector<std::vector<Point>> pieces;
    pieces.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point u0 = unit_at(kTwoPi * static_cast<double>(i) / static_cast<double>(n));
        const Point u1 = unit_at(kTwoPi * static_cast<double>(i + 1) / static_cast<double>(n));
        pieces.push_back({center + u0 * r_in, center + u0 * ro, center + u1 * ro, center + u1 * r_in});
    }
    return pieces;
}

}  // namespace

// Circle ---------------------------------------------------------------------

Circle::Circle(std::string id, Point center, double radius)
    : MovableObject(std::move(id)), center_(center), radius_(radius) {}

std::vector<CoverEntry> Circle::anatomy() const {
    CoverBuilder cb;
    if (radius_ > 0.0 && std::isfinite(radius_)) {
        const double band = detail::band_for(radius_);
        cb.nodes(arc_band_nodes(center_, radius_, band, detail::band_count(radius_, band),
                                NodeBehavior::NodeMove),
                 {HandleKind::Band, 0});
        cb.polygon(detail::circumscribed(center_, radius_, detail::body_segments(radius_)),
                   NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 0});
    }
    return cb.take();
}

std::vector<Point> Circle::defining_points() const { return {center_, center_ + unit_at(angle_) * radius_}; }

Box Circle::bounds() const { return Box::of_point(center_).inflated(radius_); }

bool Circle::interior_contains(Point pt) const { return distance(pt, center_) <= radius_; }

Footprint Circle::footprint() const { return {Piece::disk(center_, radius_)}; }

std::vector<std::string> Circle::validate() const {
    auto issues = MovableObject::validate();
    if (!(radius_ > 0.0) || !std::isfinite(radius_)) issues.push_back(id() + ": radius must be positive");
    return issues;
}

std::unique_ptr<MovableObject> Circle::clone() const { return std::make_unique<Circle>(*this); }

bool Circle::scale_uniform(Point before, Point pointer, const EditContext& ctx) {
    const auto f = detail::scale_factor(center_, before, pointer);
    if (!f) return false;
    double r = radius_ * *f;
    if (ctx.safe) r = std::max(r, kMinRadius);
    radius_ = clamp_radius_to_limits(r);
    return true;
}

void Circle::do_translate(Vector d) { center_ += d; }

EditResult Circle::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    if (h.kind != HandleKind::Band) return EditResult::Rejected;
    return scale_uniform(from, to, ctx) ? EditResult::Applied : EditResult::Rejected;
}

void Circle::do_rotate(Point pivot, double radians) {
    center_ = rotate_about(center_, pivot, radians);
    angle_ = normalize_angle(angle_ + radians);
}

// Ring -----------------------------------------------------------------------

Ring::Ring(std::string id, Point center, double r_inner, double r_outer, std::vector<double> partitions)
    : MovableObject(std::move(id)),
      center_(center),
      r_inner_(r_inner),
      r_outer_(r_outer),
      partitions_(std::move(partitions)) {
    canonicalize_partitions();
}

std::vector<CoverEntry> Ring::anatomy() const {
    CoverBuilder cb;
    if (!(r_inner_ > 0.0) || !(r_outer_ > 0.0)) return cb.take();
    const double outer_band = detail::band_for(r_outer_);
    const double inner_band = detail::band_for(r_inner_);
    cb.nodes(arc_band_nodes(center_, r_outer_, outer_band, detail::band_count(r_outer_, outer_band),
                            NodeBehavior::NodeMove),
             {HandleKind::OuterBand, 0});
    cb.nodes(arc_band_nodes(center_, r_inner_, inner_band, detail::band_count(r_inner_, inner_band),
                            NodeBehavior::NodeMove),
             {HandleKind::InnerBand, 0});
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        const Point u = unit_at(partitions_[i]);
        cb.strip(center_ + u * r_inner_, center_ + u * r_outer_, kBandHalfwidth, NodeBehavior::NodeMove,
                 CursorHint::Rotate, {HandleKind::Partition, i});
    }
    for (auto& piece : annulus_pieces(center_, r_inner_, r_outer_, detail::body_segments(r_outer_))) {
        cb.polygon(std::move(piece), NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 0});
    }
    cb.circle(center_, r_inner_, NodeBehavior::Transparent, CursorHint::Default, {HandleKind::Hole, 0});
    return cb.take();
}

std::vector<Point> Ring::defining_points() const {
    std::vector<Point> pts{center_};
    for (double a : partitions_) pts.push_back(center_ + unit_at(a) * r_outer_);
    return pts;
}

Box Ring::bounds() const { return Box::of_point(center_).inflated(r_outer_); }

bool Ring::interior_contains(Point pt) const {
    const double d = distance(pt, center_);
    return d >= r_inner_ && d <= r_outer_;
}

Footprint Ring::footprint() const {
    Footprint fp;
    for (auto& piece : annulus_pieces(center_, r_inner_, r_outer_, 32)) {
        fp.push_back(Piece::polygon(std::move(piece)));
    }
    return fp;
}

std::vector<std::string> Ring::validate() const {
    auto issues = MovableObject::validate();
    if (!(r_inner_ > 0.0) || !(r_inner_ < r_outer_) || !std::isfinite(r_outer_)) {
        issues.push_back(id() + ": ring needs 0 < r_inner < r_outer");
    }
    if (!partitions_.empty()) {
        const double first = partitions_.front();
        if (!std::isfinite(first) || first < -kPi || first >= kPi) {
            issues.push_back(id() + ": first partition angle not normalized");
        }
        for (std::size_t i = 1; i < partitions_.size(); ++i) {
            if (!(partitions_[i] > partitions_[i - 1])) {
                issues.push_back(id() + ": partition angles must increase");
                break;
            }
        }
        if (!(partitions_.back() < first + kTwoPi)) issues.push_back(id() + ": partitions exceed one turn");
    }
    return issues;
}

std::unique_ptr<MovableObject> Ring::clone() const { return std::make_unique<Ring>(*this); }

EditResult Ring::set_radius(RingBoundary boundary, double radius, const EditContext& ctx) {
    if (!(radius > 0.0) || !std::isfinite(radius)) return EditResult::Rejected;
    if (boundary == RingBoundary::Inner) {
        if (ctx.safe) {
            const double hi = r_outer_ - kMinGap;
            if (hi < kMinGap) return EditResult::Rejected;
            radius = std::clamp(radius, kMinGap, hi);
        }
        r_inner_ = radius;
    } else {
        radius = clamp_radius_to_limits(radius);
        if (ctx.safe) radius = std::max(radius, r_inner_ + kMinGap);
        r_outer_ = radius;
    }
    return EditResult::Applied;
}

EditResult Ring::resize(RingBoundary boundary, Point pointer, const EditContext& ctx) {
    if (!is_finite(pointer)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    const double d = distance(pointer, center_);
    if (d == 0.0) return EditResult::Rejected;
    return set_radius(boundary, d, ctx);
}

bool Ring::scale_uniform(Point before, Point pointer, const EditContext& ctx) {
    const auto f = detail::scale_factor(center_, before, pointer);
    if (!f) return false;
    double outer = clamp_radius_to_limits(r_outer_ * *f);
    double factor = outer / r_outer_;
    if (ctx.safe && r_inner_ * factor < kMinGap) factor = kMinGap / r_inner_;
    r_inner_ *= factor;
    r_outer_ *= factor;
    return true;
}

void Ring::canonicalize_partitions() {
    if (partitions_.empty()) return;
    const double first = partitions_.front();
    const double base = normalize_angle(first);
    for (std::size_t i = 1; i < partitions_.size(); ++i) {
        partitions_[i] = base + ccw_offset(partitions_[i], first);
    }
    partitions_.front() = base;
}

void Ring::set_partition_angle(std::size_t index, double angle) {
    const std::size_t n = partitions_.size();
    if (n > 1) {
        const double eps = kMinGap / r_outer_;
        const double lo = (index == 0 ? partitions_[n - 1] - kTwoPi : partitions_[index - 1]) + eps;
        const double hi = (index + 1 == n ? partitions_[0] + kTwoPi : partitions_[index + 1]) - eps;
        if (lo > hi) return;
        angle = std::clamp(angle, lo, hi);
    }
    partitions_[index] = angle;
    canonicalize_partitions();
}

void Ring::slide_partition(std::size_t index, Point pointer) {
    if (index >= partitions_.size()) throw Error(ErrorCode::InvalidGeometry, "no such partition");
    if (pointer == center_ || !is_finite(pointer)) return;
    const double current = partitions_[index];
    set_partition_angle(index, current + normalize_angle(polar_angle(pointer, center_) - current));
}

void Ring::do_translate(Vector d) { center_ += d; }

EditResult Ring::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    switch (h.kind) {
        case HandleKind::OuterBand:
        case HandleKind::InnerBand: {
            const double change = distance(to, center_) - distance(from, center_);
            const bool inner = h.kind == HandleKind::InnerBand;
            return set_radius(inner ? RingBoundary::Inner : RingBoundary::Outer,
                              (inner ? r_inner_ : r_outer_) + change, ctx);
        }
        case HandleKind::Partition: {
            if (h.index >= partitions_.size() || from == center_ || to == center_) return EditResult::Rejected;
            const double turn = normalize_angle(polar_angle(to, center_) - polar_angle(from, center_));
            set_partition_angle(h.index, partitions_[h.index] + turn);
            return EditResult::Applied;
        }
        default:
            return EditResult::Rejected;
    }
}

void Ring::do_rotate(Point pivot, double radians) {
    center_ = rotate_about(center_, pivot, radians);
    for (double& a : partitions_) a += radians;
    canonicalize_partitions();
}

// Sector ---------------------------------------------------------------------

Sector::Sector(std::string id, Point center, double radius, double start_angle, double sweep,
               SectorPolicy policy)
    : MovableObject(std::move(id)),
      center_(center),
      radius_(radius),
      start_(normalize_angle(start_angle)),
      sweep_(sweep),
      policy_(policy) {}

bool Sector::part_enabled(SectorPart part) const {
    switch (policy_) {
        case SectorPolicy::Fixed: return false;
        case SectorPolicy::ArcOnly: return part == SectorPart::Arc;
        case SectorPolicy::OneSide: return part != SectorPart::SideStart;
        case SectorPolicy::Full: return true;
    }
    return false;
}

std::vector<CoverEntry> Sector::anatomy() const {
    CoverBuilder cb;
    if (!(radius_ > 0.0) || !(sweep_ > 0.0)) return cb.take();
    if (part_enabled(SectorPart::Arc)) {
        cb.nodes(arc_segment_nodes(center_, radius_, detail::band_for(radius_), start_, sweep_,
                                   NodeBehavior::NodeMove),
                 {HandleKind::Arc, 0});
    }
    if (part_enabled(SectorPart::SideStart)) {
        cb.strip(center_, center_ + unit_at(start_) * radius_, kBandHalfwidth, NodeBehavior::NodeMove,
                 CursorHint::Rotate, {HandleKind::SideStart, 0});
    }
    if (part_enabled(SectorPart::SideEnd)) {
        cb.strip(center_, center_ + unit_at(start_ + sweep_) * radius_, kBandHalfwidth,
                 NodeBehavior::NodeMove, CursorHint::Rotate, {HandleKind::SideEnd, 0});
    }
    for (const auto& tri : detail::sector_fan(center_, radius_, start_, sweep_)) {
        cb.polygon({tri.begin(), tri.end()}, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 0});
    }
    return cb.take();
}

std::vector<Point> Sector::defining_points() const {
    return {center_, center_ + unit_at(start_) * radius_, center_ + unit_at(start_ + sweep_) * radius_};
}

Box Sector::bounds() const {
    std::vector<Point> pts{center_};
    for (const auto& tri : detail::sector_fan(center_, radius_, start_, sweep_)) {
        pts.push_back(tri[1]);
        pts.push_back(tri[2]);
    }
    return Box::of_points(pts);
}

bool Sector::interior_contains(Point pt) const {
    if (distance(pt, center_) > radius_) return false;
    if (pt == center_) return true;
    return ccw_offset(polar_angle(pt, center_), start_) <= sweep_;
}

Footprint Sector::footprint() const {
    Footprint fp;
    for (const auto& tri : detail::sector_fan(center_, radius_, start_, sweep_)) {
        fp.push_back(Piece::polygon({tri.begin(), tri.end()}));
    }
    return fp;
}

std::vector<std::string> Sector::validate() const {
    auto issues = MovableObject::validate();
    if (!(radius_ > 0.0) || !std::isfinite(radius_)) issues.push_back(id() + ": radius must be positive");
    if (!(sweep_ > 0.0) || !(sweep_ < kTwoPi)) issues.push_back(id() + ": sweep must stay inside (0, 2pi)");
    if (!std::isfinite(start_) || start_ < -kPi || start_ >= kPi) issues.push_back(id() + ": start angle not normalized");
    return issues;
}

std::unique_ptr<MovableObject> Sector::clone() const { return std::make_unique<Sector>(*this); }

EditResult Sector::set_radius(double radius, const EditContext& ctx) {
    if (!(radius > 0.0) || !std::isfinite(radius)) return EditResult::Rejected;
    if (ctx.safe) radius = std::max(radius, kMinRadius);
    radius_ = clamp_radius_to_limits(radius);
    return EditResult::Applied;
}

EditResult Sector::turn_side(SectorPart part, double delta, const EditContext& ctx) {
    double sweep = part == SectorPart::SideStart ? sweep_ - delta : sweep_ + delta;
    if (ctx.safe) sweep = std::clamp(sweep, kMinSweep, kTwoPi - kMinSweep);
    if (part == SectorPart::SideStart) start_ = normalize_angle(start_ + (sweep_ - sweep));
    sweep_ = sweep;
    return EditResult::Applied;
}

EditResult Sector::resize(SectorPart part, Point pointer, const EditContext& ctx) {
    if (!part_enabled(part)) throw Error(ErrorCode::DisabledPart, "sector '" + id() + "' freezes this part");
    if (!is_finite(pointer)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    if (pointer == center_) return EditResult::Rejected;
    if (part == SectorPart::Arc) return set_radius(distance(pointer, center_), ctx);
    const double side = part == SectorPart::SideStart ? start_ : start_ + sweep_;
    return turn_side(part, normalize_angle(polar_angle(pointer, center_) - side), ctx);
}

void Sector::do_translate(Vector d) { center_ += d; }

EditResult Sector::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    if (from == center_ || to == center_) return EditResult::Rejected;
    switch (h.kind) {
        case HandleKind::Arc:
            if (!part_enabled(SectorPart::Arc)) return EditResult::Rejected;
            return set_radius(radius_ + distance(to, center_) - distance(from, center_), ctx);
        case HandleKind::SideStart:
        case HandleKind::SideEnd: {
            const SectorPart part = h.kind == HandleKind::SideStart ? SectorPart::SideStart : SectorPart::SideEnd;
            if (!part_enabled(part)) return EditResult::Rejected;
            return turn_side(part, normalize_angle(polar_angle(to, center_) - polar_angle(from, center_)), ctx);
        }
        default:
            return EditResult::Rejected;
    }
}

void Sector::do_rotate(Point pivot, double radians) {
    center_ = rotate_about(center_, pivot, radians);
    start_ = normalize_angle(start_ + radians);
}

// Crescent -------------------------------------------------------------------

Crescent::Crescent(std::string id, Point center, double radius, Vector bite_offset, double bite_radius)
    : MovableObject(std::move(id)),
      center_(center),
      radius_(radius),
      bite_offset_(bite_offset),
      bite_radius_(bite_radius) {}

bool Crescent::horns(Point& first, Point& second) const {
    const double d = length(bite_offset_);
    if (!(d > std::abs(radius_ - bite_radius_)) || !(d < radius_ + bite_radius_)) return false;
    const double phi = std::atan2(bite_offset_.y, bite_offset_.x);
    const double alpha = std::acos(
        std::clamp((radius_ * radius_ + d * d - bite_radius_ * bite_radius_) / (2.0 * radius_ * d), -1.0, 1.0));
    first = center_ + unit_at(phi + alpha) * radius_;
    second = center_ + unit_at(phi - alpha) * radius_;
    return true;
}

std::vector<CoverEntry> Crescent::anatomy() const {
    CoverBuilder cb;
    if (!(radius_ > 0.0) || !(bite_radius_ > 0.0)) return cb.take();
    const double d = length(bite_offset_);
    const double phi = std::atan2(bite_offset_.y, bite_offset_.x);
    const Point bite = bite_center();
    Point h1, h2;
    if (horns(h1, h2)) {
        const double alpha = std::acos(std::clamp(
            (radius_ * radius_ + d * d - bite_radius_ * bite_radius_) / (2.0 * radius_ * d), -1.0, 1.0));
        const double beta = std::acos(std::clamp(
            (bite_radius_ * bite_radius_ + d * d - radius_ * radius_) / (2.0 * bite_radius_ * d), -1.0, 1.0));
        cb.nodes(arc_segment_nodes(center_, radius_, detail::band_for(radius_), phi + alpha,
                                   kTwoPi - 2.0 * alpha, NodeBehavior::NodeMove),
                 {HandleKind::OuterBand, 0});
        cb.nodes(arc_segment_nodes(bite, bite_radius_, detail::band_for(bite_radius_), phi + kPi - beta,
                                   2.0 * beta, NodeBehavior::NodeMove),
                 {HandleKind::InnerBand, 0});
    } else {
        const double band = detail::band_for(radius_);
        cb.nodes(arc_band_nodes(center_, radius_, band, detail::band_count(radius_, band), NodeBehavior::NodeMove),
                 {HandleKind::OuterBand, 0});
    }
    cb.circle(bite, bite_radius_, NodeBehavior::Transparent, CursorHint::Default, {HandleKind::Bite, 0});
    cb.polygon(detail::circumscribed(center_, radius_, detail::body_segments(radius_)), NodeBehavior::WholeMove,
               CursorHint::Move, {HandleKind::Body, 0});
    return cb.take();
}

std::vector<Point> Crescent::defining_points() const {
    std::vector<Point> pts{center_, bite_center()};
    Point h1, h2;
    if (horns(h1, h2)) {
        pts.push_back(h1);
        pts.push_back(h2);
    }
    return pts;
}

Box Crescent::bounds() const { return Box::of_point(center_).inflated(radius_); }

bool Crescent::interior_contains(Point pt) const {
    return distance(pt, center_) <= radius_ && distance(pt, bite_center()) >= bite_radius_;
}

Footprint Crescent::footprint() const {
    Point h1, h2;
    if (!horns(h1, h2)) return {Piece::disk(center_, radius_)};
    const double d = length(bite_offset_);
    const double phi = std::atan2(bite_offset_.y, bite_offset_.x);
    const double alpha = std::acos(
        std::clamp((radius_ * radius_ + d * d - bite_radius_ * bite_radius_) / (2.0 * radius_ * d), -1.0, 1.0));
    const double beta = std::acos(std::clamp(
        (bite_radius_ * bite_radius_ + d * d - radius_ * radius_) / (2.0 * bite_radius_ * d), -1.0, 1.0));
    constexpr std::size_t kSlices = 32;
    const Point bite = bite_center();
    const double slice = (kTwoPi - 2.0 * alpha) / kSlices;
    // Outer chords pushed out to touch the arc, so the slices cover it.
    const double ro = radius_ / std::cos(slice / 2.0);
    auto outer = [&](std::size_t k) { return center_ + unit_at(phi + alpha + slice * static_cast<double>(k)) * ro; };
    auto inner = [&](std::size_t k) {
        return bite + unit_at(phi + kPi - beta + 2.0 * beta * static_cast<double>(k) / kSlices) * bite_radius_;
    };
    Footprint fp;
    for (std::size_t k = 0; k < kSlices; ++k) {
        fp.push_back(Piece::hull_of({outer(k), outer(k + 1), inner(k + 1), inner(k)}));
    }
    return fp;
}

std::vector<std::string> Crescent::validate() const {
    auto issues = MovableObject::validate();
    if (!(radius_ > 0.0) || !(bite_radius_ > 0.0)) issues.push_back(id() + ": radii must be positive");
    Point h1, h2;
    if (!horns(h1, h2)) issues.push_back(id() + ": bite must cut the outer circle");
    return issues;
}

std::unique_ptr<MovableObject> Crescent::clone() const { return std::make_unique<Crescent>(*this); }

bool Crescent::scale_uniform(Point before, Point pointer, const EditContext& ctx) {
    const auto f = detail::scale_factor(center_, before, pointer);
    if (!f) return false;
    double r = radius_ * *f;
    if (ctx.safe) r = std::max(r, kMinRadius);
    r = clamp_radius_to_limits(r);
    const double factor = r / radius_;
    radius_ = r;
    bite_offset_ = bite_offset_ * factor;
    bite_radius_ *= factor;
    return true;
}

void Crescent::do_translate(Vector d) { center_ += d; }

EditResult Crescent::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    if (h.kind == HandleKind::OuterBand) {
        return scale_uniform(from, to, ctx) ? EditResult::Applied : EditResult::Rejected;
    }
    if (h.kind != HandleKind::InnerBand) return EditResult::Rejected;
    const Point bite = bite_center();
    double r = bite_radius_ + distance(to, bite) - distance(from, bite);
    if (ctx.safe) {
        const double d = length(bite_offset_);
        const double lo = std::max(std::abs(radius_ - d) + kMinGap, kMinRadius);
        const double hi = radius_ + d - kMinGap;
        if (lo > hi) return EditResult::Rejected;
        r = std::clamp(r, lo, hi);
    }
    if (!(r > 0.0)) return EditResult::Rejected;
    bite_radius_ = r;
    return EditResult::Applied;
}

void Crescent::do_rotate(Point pivot, double radians) {
    center_ = rotate_about(center_, pivot, radians);
    bite_offset_ = rotate_about(bite_offset_, Point{}, radians);
}

}  // namespace movable
