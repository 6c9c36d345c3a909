#include "movable/object.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "movable/error.hpp"

namespace movable {

namespace {

constexpr std::array<std::pair<ObjectKind, std::string_view>, 14> kKindNames{{
    {ObjectKind::SolitaryLine, "line"},
    {ObjectKind::SegmentedLine, "segmented_line"},
    {ObjectKind::Rect, "rect"},
    {ObjectKind::Circle, "circle"},
    {ObjectKind::Ring, "ring"},
    {ObjectKind::RegularPolygon, "regular_polygon"},
    {ObjectKind::ConvexPolygon, "convex_polygon"},
    {ObjectKind::ChatoyantPolygon, "chatoyant_polygon"},
    {ObjectKind::Sector, "sector"},
    {ObjectKind::Crescent, "crescent"},
    {ObjectKind::TextM, "text_m"},
    {ObjectKind::TextMR, "text_mr"},
    {ObjectKind::SimpleHouse, "house"},
    {ObjectKind::ElasticGroup, "group"},
}};

}  // namespace

std::string_view kind_name(ObjectKind kind) {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<ObjectKind> kind_from_name(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

bool limits_valid(const SizeLimits& l) {
    return l.min_size.x > 0.0 && l.min_size.y > 0.0 && l.min_radius > 0.0 &&
           l.min_size.x <= l.max_size.x && l.min_size.y <= l.max_size.y &&
           l.min_radius <= l.max_radius && is_finite(l.max_size) && std::isfinite(l.max_radius);
}

MovableObject::MovableObject(std::string id) : id_(std::move(id)) {}

Cover MovableObject::build_cover() const {
    Cover cover;
    for (CoverEntry& entry : anatomy()) {
        if (!movable_ && entry.node.behavior != NodeBehavior::Transparent) {
            entry.node.behavior = NodeBehavior::Frozen;
            entry.node.cursor = CursorHint::Default;
        }
        cover.nodes.push_back(std::move(entry.node));
    }
    return cover;
}

void MovableObject::translate(Vector delta) {
    if (!movable_) throw Error(ErrorCode::ImmovableObject, "object '" + id_ + "' is not movable");
    if (!is_finite(delta)) throw Error(ErrorCode::InvalidGeometry, "non-finite translation");
    do_translate(delta);
}

EditResult MovableObject::move_node(const Handle& handle, Point from, Point to, const EditContext& ctx) {
    if (!movable_) throw Error(ErrorCode::ImmovableObject, "object '" + id_ + "' is not movable");
    if (!is_finite(from) || !is_finite(to)) {
        throw Error(ErrorCode::InvalidGeometry, "non-finite pointer position");
    }
    return do_move_node(handle, from, to, ctx);
}

void MovableObject::rotate(Point pivot, Angle delta) {
    if (!rotatable() || !movable_) {
        throw Error(ErrorCode::NotRotatable, "object '" + id_ + "' cannot be rotated");
    }
    if (!is_finite(pivot)) throw Error(ErrorCode::InvalidGeometry, "non-finite rotation pivot");
    do_rotate(pivot, delta.radians());
}

std::vector<std::string> MovableObject::validate() const {
    std::vector<std::string> issues;
    for (const Point& p : defining_points()) {
        if (!is_finite(p)) {
            issues.push_back(id_ + ": non-finite coordinate");
            break;
        }
    }
    if (limits_ && !limits_valid(*limits_)) issues.push_back(id_ + ": size limits need 0 < min <= max");
    return issues;
}

double MovableObject::clamp_radius_to_limits(double r) const {
    if (!limits_) return r;
    return std::clamp(r, limits_->min_radius, limits_->max_radius);
}

Vector MovableObject::clamp_size_to_limits(Vector size) const {
    if (!limits_) return size;
    return {std::clamp(size.x, limits_->min_size.x, limits_->max_size.x),
            std::clamp(size.y, limits_->min_size.y, limits_->max_size.y)};
}

void CoverBuilder::circle(Point center, double radius, NodeBehavior behavior, CursorHint cursor,
                          Handle handle) {
    CoverNode node{CircleShape{center, radius}, behavior, cursor};
    if (is_valid_node(node)) entries_.push_back({std::move(node), handle});
}

void CoverBuilder::polygon(std::vector<Point> vertices, NodeBehavior behavior, CursorHint cursor,
                           Handle handle) {
    if (vertices.size() >= 3 && signed_area(vertices) < 0.0) {
        std::reverse(vertices.begin(), vertices.end());
    }
    CoverNode node{PolygonShape{std::move(vertices)}, behavior, cursor};
    if (is_valid_node(node)) entries_.push_back({std::move(node), handle});
}

void CoverBuilder::strip(Point a, Point b, double halfwidth, NodeBehavior behavior, CursorHint cursor,
                         Handle handle) {
    CoverNode node{StripShape{a, b, halfwidth}, behavior, cursor};
    if (is_valid_node(node)) entries_.push_back({std::move(node), handle});
}

void CoverBuilder::nodes(const std::vector<CoverNode>& nodes, Handle handle) {
    for (const CoverNode& node : nodes) {
        if (is_valid_node(node)) entries_.push_back({node, handle});
    }
}

}  // namespace movable
