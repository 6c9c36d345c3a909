#include "movable/groups.hpp"

#include <algorithm>
#include <cmath>

#include "movable/error.hpp"
#include "movable/scene.hpp"
#include "movable/shapes.hpp"

namespace movable {

// ElasticGroup ---------------------------------------------------------------

ElasticGroup::ElasticGroup(std::string id, std::vector<std::string> members, Margins margins, std::string title,
                           double title_offset)
    : MovableObject(std::move(id)),
      members_(std::move(members)),
      margins_(margins),
      title_(std::move(title)),
      title_offset_(title_offset),
      frame_{0.0, 0.0, 0.0, 0.0} {}

double ElasticGroup::title_width() const {
    return 0.6 * kTitleFontSize * static_cast<double>(std::max<std::size_t>(title_.size(), 2));
}

Point ElasticGroup::title_anchor() const {
    return {frame_.min_x + title_offset_ * frame_.width(), frame_.max_y};
}

void ElasticGroup::remove_member(const std::string& id) {
    members_.erase(std::remove(members_.begin(), members_.end(), id), members_.end());
}

void ElasticGroup::slide_title(double x) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    const double w = frame_.width();
    if (!(w > 0.0)) return;
    title_offset_ = std::clamp((x - frame_.min_x) / w, 0.0, 1.0);
}

std::vector<CoverEntry> ElasticGroup::anatomy() const {
    CoverBuilder cb;
    const Point t = title_anchor();
    const double half = title_width() / 2.0;
    cb.strip(t - Vector{half, 0.0}, t + Vector{half, 0.0}, kTitleFontSize / 2.0, NodeBehavior::NodeMove,
             CursorHint::ResizeHorizontal, {HandleKind::Title, 0});
    const Point lb{frame_.min_x, frame_.min_y};
    const Point rb{frame_.max_x, frame_.min_y};
    const Point rt{frame_.max_x, frame_.max_y};
    const Point lt{frame_.min_x, frame_.max_y};
    cb.strip(lb, lt, kBandHalfwidth, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Edge, 0});
    cb.strip(rb, rt, kBandHalfwidth, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Edge, 1});
    cb.strip(lb, rb, kBandHalfwidth, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Edge, 2});
    cb.strip(lt, rt, kBandHalfwidth, NodeBehavior::WholeMove, CursorHint::Move, {HandleKind::Edge, 3});
    return cb.take();
}

std::vector<Point> ElasticGroup::defining_points() const {
    return {Point{frame_.min_x, frame_.min_y}, Point{frame_.max_x, frame_.max_y}, title_anchor()};
}

std::vector<std::string> ElasticGroup::validate() const {
    auto issues = MovableObject::validate();
    if (members_.empty()) issues.push_back(id() + ": group has no members");
    auto sorted = members_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        issues.push_back(id() + ": duplicate group member");
    }
    if (std::find(members_.begin(), members_.end(), id()) != members_.end()) {
        issues.push_back(id() + ": group contains itself");
    }
    if (!(margins_.left >= 0.0) || !(margins_.bottom >= 0.0) || !(margins_.right >= 0.0) || !(margins_.top >= 0.0) ||
        !std::isfinite(margins_.left + margins_.bottom + margins_.right + margins_.top)) {
        issues.push_back(id() + ": margins must be finite and non-negative");
    }
    if (!(title_offset_ >= 0.0 && title_offset_ <= 1.0)) issues.push_back(id() + ": title offset outside [0, 1]");
    return issues;
}

std::unique_ptr<MovableObject> ElasticGroup::clone() const { return std::make_unique<ElasticGroup>(*this); }

EditResult ElasticGroup::do_move_node(const Handle& h, Point from, Point to, const EditContext&) {
    if (h.kind != HandleKind::Title) return EditResult::Rejected;
    slide_title(title_anchor().x + (to.x - from.x));
    return EditResult::Applied;
}

// Comment regions ------------------------------------------------------------

Point clamp_to_region(const CommentRegion& region, const Box& body_bounds, Point anchor) {
    switch (region.kind) {
        case CommentRegion::Kind::Free:
            return anchor;
        case CommentRegion::Kind::Box: {
            const Box r = body_bounds.inflated(region.extent);
            return {std::clamp(anchor.x, r.min_x, r.max_x), std::clamp(anchor.y, r.min_y, r.max_y)};
        }
        case CommentRegion::Kind::Radius: {
            const Point c = body_bounds.center();
            const double d = distance(anchor, c);
            if (d <= region.extent) return anchor;
            return c + (anchor - c) * (region.extent / d);
        }
    }
    return anchor;
}

bool in_region(const CommentRegion& region, const Box& body_bounds, Point anchor, double tolerance) {
    switch (region.kind) {
        case CommentRegion::Kind::Free:
            return true;
        case CommentRegion::Kind::Box:
            return body_bounds.inflated(region.extent + tolerance).contains(anchor);
        case CommentRegion::Kind::Radius:
            return distance(anchor, body_bounds.center()) <= region.extent + tolerance;
    }
    return true;
}

// Operations -----------------------------------------------------------------

Box frame_of(const ElasticGroup& group, const Scene& scene) {
    Box box = Box::empty();
    for (const auto& id : group.members()) {
        const MovableObject* member = scene.find(id);
        if (!member) throw Error(ErrorCode::MissingMember, "group '" + group.id() + "' lost member '" + id + "'");
        box = box.united(member->bounds());
    }
    if (box.is_empty()) throw Error(ErrorCode::MissingMember, "group '" + group.id() + "' has no members");
    const Margins& m = group.margins();
    return box.inflated(m.left, m.bottom, m.right, m.top);
}

void move_group(Scene& scene, const std::string& group_id, Vector delta) {
    if (scene.get(group_id).kind() != ObjectKind::ElasticGroup) {
        throw Error(ErrorCode::UnknownId, "'" + group_id + "' is not a group");
    }
    scene.translate_carried(group_id, delta);
}

void move_member(Scene& scene, const std::string& group_id, const std::string& member_id, Vector delta) {
    const auto* group = dynamic_cast<const ElasticGroup*>(&scene.get(group_id));
    if (!group) throw Error(ErrorCode::UnknownId, "'" + group_id + "' is not a group");
    const auto& members = group->members();
    if (std::find(members.begin(), members.end(), member_id) == members.end()) {
        throw Error(ErrorCode::MissingMember, "'" + member_id + "' is not in group '" + group_id + "'");
    }
    scene.translate_carried(member_id, delta);
}

void slide_title(ElasticGroup& group, double pointer_x) { group.slide_title(pointer_x); }

Vector move_comment(Scene& scene, const CommentedElement& pair, Vector delta) {
    MovableObject& comment = scene.get(pair.comment);
    const Point anchor = comment.anchor();
    const Point target = clamp_to_region(pair.region, scene.get(pair.body).bounds(), anchor + delta);
    const Vector applied = pair.region.kind == CommentRegion::Kind::Free ? delta : target - anchor;
    scene.translate_carried(pair.comment, applied);
    return applied;
}

}  // namespace movable
