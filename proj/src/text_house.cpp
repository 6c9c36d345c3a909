#include <algorithm>
#include <cmath>

#include "movable/error.hpp"
#include "movable/shapes.hpp"
#include "shape_util.hpp"

namespace movable {

namespace {

/// Smallest house body side kept in safe mode.
constexpr double kMinHouseSide = 4.0;

}  // namespace

// Text -----------------------------------------------------------------------

Text::Text(std::string id, std::string text, Point center, double font_size, bool rotatable_text)
    : MovableObject(std::move(id)),
      text_(std::move(text)),
      center_(center),
      font_size_(font_size),
      kind_(rotatable_text ? ObjectKind::TextMR : ObjectKind::TextM) {}

double Text::box_width() const { return 0.6 * font_size_ * static_cast<double>(text_.size()); }

std::array<Point, 4> Text::corners() const {
    const double hw = box_width() / 2.0;
    const double hh = font_size_ / 2.0;
    const std::array<Point, 4> local{Point{-hw, -hh}, Point{hw, -hh}, Point{hw, hh}, Point{-hw, hh}};
    std::array<Point, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = rotate_about(center_ + local[i], center_, angle_);
    return out;
}

std::vector<CoverEntry> Text::anatomy() const {
    CoverBuilder cb;
    const auto c = corners();
    cb.polygon({c.begin(), c.end()}, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 0});
    return cb.take();
}

std::vector<Point> Text::defining_points() const {
    const auto c = corners();
    return {center_, c[0], c[2]};
}

Box Text::bounds() const {
    const auto c = corners();
    return Box::of_points(c);
}

bool Text::interior_contains(Point pt) const {
    const auto c = corners();
    return detail::point_in_convex(pt, {c.begin(), c.end()});
}

Footprint Text::footprint() const {
    const auto c = corners();
    return {Piece::polygon({c.begin(), c.end()})};
}

std::vector<std::string> Text::validate() const {
    auto issues = MovableObject::validate();
    if (text_.empty()) issues.push_back(id() + ": text is empty");
    if (!(font_size_ > 0.0) || !std::isfinite(font_size_)) issues.push_back(id() + ": font size must be positive");
    return issues;
}

std::unique_ptr<MovableObject> Text::clone() const { return std::make_unique<Text>(*this); }

void Text::do_translate(Vector d) { center_ += d; }

EditResult Text::do_move_node(const Handle&, Point, Point, const EditContext&) { return EditResult::Rejected; }

void Text::do_rotate(Point pivot, double radians) {
    center_ = rotate_about(center_, pivot, radians);
    angle_ = normalize_angle(angle_ + radians);
}

// SimpleHouse ----------------------------------------------------------------

SimpleHouse::SimpleHouse(std::string id, Box body, Point apex)
    : MovableObject(std::move(id)), body_(body), apex_(apex) {}

Point SimpleHouse::handle_position(const Handle& h) const {
    if (h.kind == HandleKind::Apex) return apex_;
    if (h.kind == HandleKind::Corner) {
        const double x = (h.index == 1 || h.index == 2) ? body_.max_x : body_.min_x;
        const double y = h.index >= 2 ? body_.max_y : body_.min_y;
        return {x, y};
    }
    switch (static_cast<RectSide>(h.index)) {
        case RectSide::Left: return {body_.min_x, body_.center().y};
        case RectSide::Right: return {body_.max_x, body_.center().y};
        case RectSide::Bottom: return {body_.center().x, body_.min_y};
        case RectSide::Top: return {body_.center().x, body_.max_y};
    }
    return body_.center();
}

std::vector<CoverEntry> SimpleHouse::anatomy() const {
    CoverBuilder cb;
    cb.circle(apex_, kHandleRadius, NodeBehavior::NodeMove, CursorHint::ResizeVertical, {HandleKind::Apex, 0});
    for (std::size_t i = 0; i < 4; ++i) {
        cb.circle(handle_position({HandleKind::Corner, i}), kHandleRadius, NodeBehavior::NodeMove,
                  CursorHint::ResizeDiagonal, {HandleKind::Corner, i});
    }
    const Point lb{body_.min_x, body_.min_y};
    const Point rb{body_.max_x, body_.min_y};
    const Point rt{body_.max_x, body_.max_y};
    const Point lt{body_.min_x, body_.max_y};
    cb.strip(lb, lt, kBandHalfwidth, NodeBehavior::NodeMove, CursorHint::ResizeHorizontal,
             {HandleKind::Edge, static_cast<std::size_t>(RectSide::Left)});
    cb.strip(rb, rt, kBandHalfwidth, NodeBehavior::NodeMove, CursorHint::ResizeHorizontal,
             {HandleKind::Edge, static_cast<std::size_t>(RectSide::Right)});
    cb.strip(lb, rb, kBandHalfwidth, NodeBehavior::NodeMove, CursorHint::ResizeVertical,
             {HandleKind::Edge, static_cast<std::size_t>(RectSide::Bottom)});
    cb.strip(lt, rt, kBandHalfwidth, NodeBehavior::NodeMove, CursorHint::ResizeVertical,
             {HandleKind::Edge, static_cast<std::size_t>(RectSide::Top)});
    cb.polygon({lb, rb, rt, lt}, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 0});
    cb.polygon({lt, rt, apex_}, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Body, 1});
    return cb.take();
}

std::vector<Point> SimpleHouse::defining_points() const {
    return {Point{body_.min_x, body_.min_y}, Point{body_.max_x, body_.max_y}, apex_};
}

Box SimpleHouse::bounds() const { return body_.united(Box::of_point(apex_)); }

bool SimpleHouse::interior_contains(Point pt) const {
    if (body_.contains(pt)) return true;
    return detail::point_in_triangle(pt, {Point{body_.min_x, body_.max_y}, Point{body_.max_x, body_.max_y}, apex_});
}

Footprint SimpleHouse::footprint() const {
    const Point lt{body_.min_x, body_.max_y};
    const Point rt{body_.max_x, body_.max_y};
    return {Piece::polygon({{body_.min_x, body_.min_y}, {body_.max_x, body_.min_y}, rt, lt}),
            Piece::polygon({lt, rt, apex_})};
}

std::vector<std::string> SimpleHouse::validate() const {
    auto issues = MovableObject::validate();
    if (!(body_.width() > 0.0) || !(body_.height() > 0.0)) issues.push_back(id() + ": house body is empty");
    if (!(apex_.y > body_.max_y)) issues.push_back(id() + ": apex must be above the body");
    return issues;
}

std::unique_ptr<MovableObject> SimpleHouse::clone() const { return std::make_unique<SimpleHouse>(*this); }

EditResult SimpleHouse::move_apex(Point pointer, const EditContext& ctx) {
    if (!is_finite(pointer)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    if (ctx.safe) pointer.y = std::max(pointer.y, body_.max_y + kMinGap);
    apex_ = pointer;
    return EditResult::Applied;
}

EditResult SimpleHouse::resize(const Handle& h, Point pointer, const EditContext& ctx) {
    if (!is_finite(pointer)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    Box next = body_;
    bool left = false, right = false, bottom = false, top = false;
    if (h.kind == HandleKind::Corner && h.index < 4) {
        left = h.index == 0 || h.index == 3;
        right = !left;
        bottom = h.index < 2;
        top = !bottom;
    } else if (h.kind == HandleKind::Edge && h.index < 4) {
        const auto side = static_cast<RectSide>(h.index);
        left = side == RectSide::Left;
        right = side == RectSide::Right;
        bottom = side == RectSide::Bottom;
        top = side == RectSide::Top;
    } else {
        throw Error(ErrorCode::DisabledHandle, "house '" + id() + "' has no such handle");
    }
    if (left) next.min_x = pointer.x;
    if (right) next.max_x = pointer.x;
    if (bottom) next.min_y = pointer.y;
    if (top) next.max_y = pointer.y;

    Vector size{next.width(), next.height()};
    if (ctx.safe) size = {std::max(size.x, kMinHouseSide), std::max(size.y, kMinHouseSide)};
    size = clamp_size_to_limits(size);
    if (left) next.min_x = next.max_x - size.x;
    else next.max_x = next.min_x + size.x;
    if (bottom) next.min_y = next.max_y - size.y;
    else next.max_y = next.min_y + size.y;
    if (ctx.safe && top && next.max_y > apex_.y - kMinGap) {
        next.max_y = apex_.y - kMinGap;
        if (next.height() < kMinHouseSide) return EditResult::Rejected;
    }
    body_ = next;
    return EditResult::Applied;
}

void SimpleHouse::do_translate(Vector d) {
    body_ = body_.translated(d);
    apex_ += d;
}

EditResult SimpleHouse::do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) {
    const Point target = handle_position(h) + (to - from);
    if (h.kind == HandleKind::Apex) return move_apex(target, ctx);
    return resize(h, target, ctx);
}

// Houses never rotate; the base class refuses before reaching this.
void SimpleHouse::do_rotate(Point, double) {}

}  // namespace movable
