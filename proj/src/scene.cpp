#include "movable/scene.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "movable/error.hpp"
#include "movable/shapes.hpp"

namespace movable {

namespace {

/// Nesting depth beyond which group frames stop recursing (cycles).
constexpr int kMaxGroupDepth = 32;

}  // namespace

Scene::Scene(const Scene& other) : comments_(other.comments_), settings_(other.settings_), mover_(other.mover_) {
    objects_.reserve(other.objects_.size());
    for (const auto& obj : other.objects_) objects_.push_back(obj->clone());
}

Scene& Scene::operator=(const Scene& other) {
    if (this != &other) {
        Scene copy(other);
        *this = std::move(copy);
    }
    return *this;
}

std::optional<std::size_t> Scene::index_of_opt(const std::string& id) const {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        if (objects_[i]->id() == id) return i;
    }
    return std::nullopt;
}

std::size_t Scene::index_of(const std::string& id) const {
    const auto idx = index_of_opt(id);
    if (!idx) throw Error(ErrorCode::UnknownId, "no object '" + id + "'");
    return *idx;
}

MovableObject* Scene::find(const std::string& id) {
    const auto idx = index_of_opt(id);
    return idx ? objects_[*idx].get() : nullptr;
}

const MovableObject* Scene::find(const std::string& id) const {
    const auto idx = index_of_opt(id);
    return idx ? objects_[*idx].get() : nullptr;
}

MovableObject& Scene::get(const std::string& id) { return *objects_[index_of(id)]; }

const MovableObject& Scene::get(const std::string& id) const { return *objects_[index_of(id)]; }

std::vector<std::string> Scene::display_order() const {
    std::vector<std::string> ids;
    ids.reserve(objects_.size());
    for (const auto& obj : objects_) ids.push_back(obj->id());
    return ids;
}

MovableObject& Scene::add_object(std::unique_ptr<MovableObject> object) {
    if (!object) throw Error(ErrorCode::InvalidGeometry, "null object");
    if (contains(object->id())) throw Error(ErrorCode::DuplicateId, "duplicate id '" + object->id() + "'");
    objects_.push_back(std::move(object));
    MovableObject& added = *objects_.back();
    if (added.kind() == ObjectKind::ElasticGroup) refresh_groups();
    return added;
}

void Scene::remove_object(const std::string& id) {
    const std::size_t idx = index_of(id);
    objects_.erase(objects_.begin() + static_cast<std::ptrdiff_t>(idx));
    if (const auto info = mover_.caught_info(); info && info->object_id == id) mover_.cancel();
    std::erase_if(comments_, [&](const CommentedElement& p) { return p.body == id || p.comment == id; });
    std::erase(settings_.overlap.obstacles, id);
    std::vector<std::string> emptied;
    for (auto& obj : objects_) {
        if (auto* group = dynamic_cast<ElasticGroup*>(obj.get())) {
            group->remove_member(id);
            if (group->members().empty()) emptied.push_back(group->id());
        }
    }
    for (const auto& gid : emptied) {
        if (contains(gid)) remove_object(gid);
    }
    refresh_groups();
}

void Scene::pop_to_top(const std::string& id) {
    const std::size_t idx = index_of(id);
    auto obj = std::move(objects_[idx]);
    objects_.erase(objects_.begin() + static_cast<std::ptrdiff_t>(idx));
    objects_.push_back(std::move(obj));
}

void Scene::replace_object(std::unique_ptr<MovableObject> object) {
    objects_[index_of(object->id())] = std::move(object);
}

void Scene::add_comment(CommentedElement pair) {
    if (!contains(pair.body)) throw Error(ErrorCode::UnknownId, "no body '" + pair.body + "'");
    if (!contains(pair.comment)) throw Error(ErrorCode::UnknownId, "no comment '" + pair.comment + "'");
    comments_.push_back(std::move(pair));
}

const CommentedElement* Scene::pair_of_comment(const std::string& comment_id) const {
    for (const auto& p : comments_) {
        if (p.comment == comment_id) return &p;
    }
    return nullptr;
}

std::vector<std::string> Scene::carried_ids(const std::string& id) const {
    std::vector<std::string> ids{id};
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::string current = ids[i];
        auto push = [&](const std::string& next) {
            if (std::find(ids.begin(), ids.end(), next) == ids.end() && contains(next)) ids.push_back(next);
        };
        for (const auto& p : comments_) {
            if (p.body == current) push(p.comment);
        }
        if (const auto* group = dynamic_cast<const ElasticGroup*>(find(current))) {
            for (const auto& member : group->members()) push(member);
        }
    }
    return ids;
}

void Scene::translate_carried(const std::string& id, Vector delta) {
    if (!get(id).movable()) throw Error(ErrorCode::ImmovableObject, "object '" + id + "' is not movable");
    for (const auto& carried : carried_ids(id)) {
        MovableObject& obj = get(carried);
        // Immovable members stay put; the frame stretches around them.
        if (obj.movable()) obj.translate(delta);
    }
    refresh_groups();
}

Box Scene::group_frame(const ElasticGroup& group, int depth) const {
    Box box = Box::empty();
    for (const auto& id : group.members()) {
        const MovableObject* member = find(id);
        if (!member) continue;
        const auto* nested = dynamic_cast<const ElasticGroup*>(member);
        box = box.united(nested && depth < kMaxGroupDepth ? group_frame(*nested, depth + 1) : member->bounds());
    }
    if (box.is_empty()) return group.frame();
    const Margins& m = group.margins();
    return box.inflated(m.left, m.bottom, m.right, m.top);
}

void Scene::refresh_groups() {
    for (auto& obj : objects_) {
        if (auto* group = dynamic_cast<ElasticGroup*>(obj.get())) group->set_frame(group_frame(*group, 0));
    }
}

void Scene::enforce_comment_limits() {
    for (const auto& p : comments_) {
        if (p.region.kind == CommentRegion::Kind::Free) continue;
        MovableObject* comment = find(p.comment);
        const MovableObject* body = find(p.body);
        if (!comment || !body || !comment->movable()) continue;
        const Point anchor = comment->anchor();
        const Point target = clamp_to_region(p.region, body->bounds(), anchor);
        if (target != anchor) comment->translate(target - anchor);
    }
    refresh_groups();
}

std::vector<std::string> Scene::validate() const {
    std::vector<std::string> issues;
    std::set<std::string> seen;
    for (const auto& obj : objects_) {
        if (!seen.insert(obj->id()).second) issues.push_back("duplicate id '" + obj->id() + "'");
        if (obj->id().empty()) issues.push_back("empty object id");
        for (auto& issue : obj->validate()) issues.push_back(std::move(issue));
    }

    for (const auto& obj : objects_) {
        const auto* group = dynamic_cast<const ElasticGroup*>(obj.get());
        if (!group) continue;
        bool complete = true;
        for (const auto& member : group->members()) {
            if (!contains(member)) {
                issues.push_back(group->id() + ": missing member '" + member + "'");
                complete = false;
            }
        }
        // Cycles: a group must not reach itself through nested members.
        std::vector<std::string> stack(group->members().begin(), group->members().end());
        std::set<std::string> visited;
        while (!stack.empty()) {
            const std::string next = stack.back();
            stack.pop_back();
            if (next == group->id()) {
                issues.push_back(group->id() + ": group nesting forms a cycle");
                complete = false;
                break;
            }
            if (!visited.insert(next).second) continue;
            if (const auto* nested = dynamic_cast<const ElasticGroup*>(find(next))) {
                stack.insert(stack.end(), nested->members().begin(), nested->members().end());
            }
        }
        if (!complete) continue;
        const Box expected = group_frame(*group, 0);
        if (!(group->frame() == expected)) issues.push_back(group->id() + ": frame is stale");
        for (const auto& member : group->members()) {
            if (!group->frame().inflated(1e-9).contains(get(member).bounds())) {
                issues.push_back(group->id() + ": member '" + member + "' sticks out of the frame");
            }
        }
    }

    std::set<std::string> commented;
    for (const auto& p : comments_) {
        const MovableObject* body = find(p.body);
        const MovableObject* comment = find(p.comment);
        if (!body) issues.push_back("comment pair: missing body '" + p.body + "'");
        if (!comment) issues.push_back("comment pair: missing comment '" + p.comment + "'");
        if (!body || !comment) continue;
        if (p.body == p.comment) issues.push_back("comment pair: '" + p.body + "' comments itself");
        if (comment->kind() != ObjectKind::TextM && comment->kind() != ObjectKind::TextMR) {
            issues.push_back("comment pair: '" + p.comment + "' is not a text");
        }
        if (!commented.insert(p.comment).second) {
            issues.push_back("comment pair: '" + p.comment + "' comments two bodies");
        }
        if (!(p.region.extent > 0.0) || !std::isfinite(p.region.extent)) {
            issues.push_back("comment pair: region of '" + p.comment + "' must be positive");
        } else if (!in_region(p.region, body->bounds(), comment->anchor())) {
            issues.push_back("comment pair: '" + p.comment + "' left its region");
        }
    }

    if (settings_.area) {
        const Box& b = settings_.area->bounds;
        if (!(b.width() > 0.0) || !(b.height() > 0.0) || !std::isfinite(b.width() + b.height())) {
            issues.push_back("area bounds must have positive width and height");
        }
    }
    for (const auto& id : settings_.overlap.obstacles) {
        if (!contains(id)) issues.push_back("obstacle '" + id + "' does not exist");
    }
    return issues;
}

}  // namespace movable
