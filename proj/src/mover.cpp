#include "movable/mover.hpp"

#include <algorithm>
#include <cmath>

#include "movable/error.hpp"
#include "movable/scene.hpp"

namespace movable {

namespace {

/// Cover nodes never reach further than this outside an object's bounds.
constexpr double kCoverSlack = 12.0;

Point clamp_into(const Box& b, Point p) {
    return {std::clamp(p.x, b.min_x, b.max_x), std::clamp(p.y, b.min_y, b.max_y)};
}

bool is_zero(Vector v) { return v.x == 0.0 && v.y == 0.0; }

/// A proposed replacement for the caught object and its limited comments.
struct Trial {
    std::vector<std::unique_ptr<MovableObject>> objects;
    bool vanished = false;
};

/// Objects whose geometry changes when @p id is reshaped: the object itself
/// and comments held in a region around it.
std::vector<const MovableObject*> reshaped_set(const Scene& scene, const std::string& id) {
    std::vector<const MovableObject*> set{&scene.get(id)};
    for (const auto& p : scene.comments()) {
        if (p.body == id && p.region.kind != CommentRegion::Kind::Free && scene.contains(p.comment) &&
            p.comment != id) {
            set.push_back(&scene.get(p.comment));
        }
    }
    return set;
}

/// Clones @p set, lets @p edit reshape the first object, then pulls the
/// comments back into their regions.
template <typename Edit>
std::optional<Trial> make_trial(const Scene& scene, const std::vector<const MovableObject*>& set, Edit&& edit) {
    Trial trial;
    for (const MovableObject* obj : set) trial.objects.push_back(obj->clone());
    const EditResult result = edit(*trial.objects.front());
    if (result == EditResult::Rejected) return std::nullopt;
    if (result == EditResult::Vanished) {
        trial.vanished = true;
        return trial;
    }
    const Box body = trial.objects.front()->bounds();
    for (std::size_t i = 1; i < trial.objects.size(); ++i) {
        MovableObject& comment = *trial.objects[i];
        const auto* pair = scene.pair_of_comment(comment.id());
        if (!pair || !comment.movable()) continue;
        const Point anchor = comment.anchor();
        const Point target = clamp_to_region(pair->region, body, anchor);
        if (target != anchor) comment.translate(target - anchor);
    }
    return trial;
}

/// Overlap and whole-object area checks for a reshaped trial.
class TrialCheck {
public:
    TrialCheck(const Scene& scene, const std::vector<const MovableObject*>& set)
        : probe_(scene, set, scene.settings().overlap), area_(scene.settings().area) {
        if (area_ && area_->mode == AreaRestriction::Mode::WholeObjectInside) {
            check_area_ = area_->bounds.contains(set.front()->bounds());
        }
    }

    bool permitted(const Trial& trial) const {
        if (check_area_ && !area_->bounds.contains(trial.objects.front()->bounds())) return false;
        if (probe_.trivial()) return true;
        std::vector<Footprint> fps;
        fps.reserve(trial.objects.size());
        for (const auto& obj : trial.objects) fps.push_back(obj->footprint());
        return probe_.permitted(fps);
    }

private:
    OverlapProbe probe_;
    std::optional<AreaRestriction> area_;
    bool check_area_ = false;
};

void commit(Scene& scene, Trial& trial) {
    for (auto& obj : trial.objects) scene.replace_object(std::move(obj));
    scene.refresh_groups();
}

/// Largest fraction in [0, 1] whose trial passes, searched to @p resolution.
template <typename MakeTrial>
std::pair<double, std::optional<Trial>> best_fraction(const TrialCheck& check, MakeTrial&& make, double resolution) {
    auto full = make(1.0);
    if (full && (full->vanished || check.permitted(*full))) return {1.0, std::move(full)};
    double lo = 0.0;
    double hi = 1.0;
    std::optional<Trial> best;
    while (hi - lo > resolution) {
        const double mid = (lo + hi) / 2.0;
        auto t = make(mid);
        if (t && !t->vanished && check.permitted(*t)) {
            lo = mid;
            best = std::move(t);
        } else {
            hi = mid;
        }
    }
    return {lo, std::move(best)};
}

}  // namespace

CatchResult Mover::catch_at(Scene& scene, Point pt, PointerButton button) {
    if (state_) throw Error(ErrorCode::ProtocolViolation, "press while '" + state_->object_id + "' is caught");
    if (!is_finite(pt)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    const auto& area = scene.settings().area;
    if (area && area->mode == AreaRestriction::Mode::GrabPointInside && !area->bounds.contains(pt)) return {};

    const auto& objects = scene.objects();
    for (std::size_t i = objects.size(); i-- > 0;) {
        const MovableObject& obj = *objects[i];
        if (obj.kind() != ObjectKind::ElasticGroup && !obj.bounds().inflated(kCoverSlack).contains(pt)) continue;
        const auto anatomy = obj.anatomy();
        for (std::size_t k = 0; k < anatomy.size(); ++k) {
            const CoverEntry& entry = anatomy[k];
            if (!contains(entry.node, pt)) continue;
            if (entry.node.behavior == NodeBehavior::Transparent) break;

            Caught c;
            c.object_id = obj.id();
            c.node_index = k;
            c.handle = entry.handle;
            c.button = button;
            c.grab_offset = pt - obj.anchor();
            c.last = pt;
            const bool frozen = !obj.movable() || entry.node.behavior == NodeBehavior::Frozen;
            if (frozen) {
                c.mode = Mode::Immobile;
            } else if (button == PointerButton::Secondary) {
                c.mode = obj.rotatable() ? Mode::Rotate : Mode::Immobile;
            } else {
                c.mode = entry.node.behavior == NodeBehavior::WholeMove ? Mode::Whole : Mode::Node;
            }
            state_ = std::move(c);
            if (scene.settings().raise_on_catch) scene.pop_to_top(obj.id());
            return {true, state_->object_id, k};
        }
    }
    return {};
}

MoveReport Mover::move_to(Scene& scene, Point pt) {
    if (!state_) return {};
    if (!is_finite(pt)) throw Error(ErrorCode::InvalidGeometry, "non-finite pointer");
    if (!scene.contains(state_->object_id)) {
        state_.reset();
        return {};
    }
    Caught c = *state_;
    MoveReport report;
    switch (c.mode) {
        case Mode::Immobile: break;  // nothing moves, the grab point stays
        case Mode::Whole: report = move_whole(scene, c, pt); break;
        case Mode::Node: report = move_node(scene, c, pt); break;
        case Mode::Rotate: report = rotate(scene, c, pt); break;
    }
    if (report.vanished) {
        state_.reset();
        return report;
    }
    c.total_displacement += report.applied_delta;
    c.total_rotation += report.applied_rotation;
    state_ = std::move(c);
    return report;
}

MoveReport Mover::move_whole(Scene& scene, Caught& c, Point pt) {
    MoveReport report;
    const Vector d = pt - c.last;
    if (is_zero(d)) return report;

    const std::string& id = c.object_id;
    const auto& settings = scene.settings();
    const Point grab = c.last;
    const Box start_box = scene.get(id).bounds();
    const CommentedElement* pair = scene.pair_of_comment(id);
    const bool limited = pair && pair->region.kind != CommentRegion::Kind::Free && scene.contains(pair->body);
    const Point anchor = scene.get(id).anchor();
    const Box body_box = limited ? scene.get(pair->body).bounds() : Box{};

    // Area and comment region, for a motion starting at @p base.
    auto restrict = [&](Vector base, Vector v) {
        if (limited) {
            const Point from = anchor + base;
            v = clamp_to_region(pair->region, body_box, from + v) - from;
        }
        if (settings.area) {
            const Box geometry = settings.area->mode == AreaRestriction::Mode::GrabPointInside
                                     ? Box::of_point(grab + base)
                                     : start_box.translated(base);
            v = clamp_translation(geometry, v, *settings.area);
        }
        if (limited && !in_region(pair->region, body_box, anchor + base + v, 0.0)) {
            double lo = 0.0;
            double hi = 1.0;
            for (int i = 0; i < 60; ++i) {
                const double mid = (lo + hi) / 2.0;
                (in_region(pair->region, body_box, anchor + base + v * mid, 0.0) ? lo : hi) = mid;
            }
            v = v * lo;
        }
        return v;
    };

    Vector allowed = restrict({}, d);
    if (settings.overlap.mode != OverlapRule::Mode::Off) {
        std::vector<const MovableObject*> moving;
        for (const auto& carried : scene.carried_ids(id)) moving.push_back(&scene.get(carried));
        const OverlapProbe probe(scene, moving, settings.overlap);
        allowed = probe.slide(allowed, restrict);
    }

    if (allowed != d) {
        report.corrected_cursor = c.last + allowed;
        c.last = *report.corrected_cursor;
    } else {
        c.last = pt;
    }
    if (is_zero(allowed)) return report;
    scene.translate_carried(id, allowed);
    report.moved = true;
    report.applied_delta = allowed;
    return report;
}

MoveReport Mover::move_node(Scene& scene, Caught& c, Point pt) {
    MoveReport report;
    const auto& settings = scene.settings();
    Point target = pt;
    if (settings.area && settings.area->mode == AreaRestriction::Mode::GrabPointInside) {
        target = clamp_into(settings.area->bounds, pt);
    }
    const Vector d = target - c.last;
    if (is_zero(d)) {
        if (target != pt) report.corrected_cursor = target;
        return report;
    }

    const std::string id = c.object_id;
    const Point from = c.last;
    const Handle handle = c.handle;
    const EditContext ctx{settings.safe};
    const auto set = reshaped_set(scene, id);
    const TrialCheck check(scene, set);
    auto make = [&](double s) {
        const Point to = s == 1.0 ? target : from + d * s;
        return make_trial(scene, set, [&](MovableObject& obj) { return obj.move_node(handle, from, to, ctx); });
    };
    auto [fraction, trial] = best_fraction(check, make, kSlideTolerance / length(d));

    if (trial && trial->vanished) {
        scene.remove_object(id);
        report.moved = true;
        report.vanished = true;
        report.applied_delta = d;
        return report;
    }
    const Vector applied = fraction == 1.0 ? d : d * fraction;
    c.last = fraction == 1.0 ? target : from + applied;
    if (c.last != pt) report.corrected_cursor = c.last;
    if (!trial || fraction == 0.0) {
        report.applied_delta = {};
        return report;
    }
    commit(scene, *trial);
    report.moved = true;
    report.applied_delta = applied;
    return report;
}

MoveReport Mover::rotate(Scene& scene, Caught& c, Point pt) {
    MoveReport report;
    const auto& settings = scene.settings();
    Point target = pt;
    if (settings.area && settings.area->mode == AreaRestriction::Mode::GrabPointInside) {
        target = clamp_into(settings.area->bounds, pt);
    }
    const std::string id = c.object_id;
    const Point center = scene.get(id).rotation_center();
    if (target == center || c.last == center) {
        c.last = target;
        if (target != pt) report.corrected_cursor = target;
        return report;
    }
    const double angle = normalize_angle(polar_angle(target, center) - polar_angle(c.last, center));
    if (angle == 0.0) {
        c.last = target;
        if (target != pt) report.corrected_cursor = target;
        return report;
    }

    const auto set = reshaped_set(scene, id);
    const TrialCheck check(scene, set);
    auto make = [&](double s) {
        const double a = s == 1.0 ? angle : angle * s;
        return make_trial(scene, set, [&](MovableObject& obj) {
            obj.rotate(center, Angle(a));
            return EditResult::Applied;
        });
    };
    // Resolution in radians: 1e-6 units of arc at the grab radius.
    const double radius = distance(c.last, center);
    auto [fraction, trial] = best_fraction(check, make, kSlideTolerance / (radius * std::abs(angle)));

    const double applied = fraction == 1.0 ? angle : angle * fraction;
    if (fraction == 1.0) {
        c.last = target;
        if (target != pt) report.corrected_cursor = target;
    } else {
        c.last = rotate_about(c.last, center, applied);
        if (settings.area && settings.area->mode == AreaRestriction::Mode::GrabPointInside) {
            c.last = clamp_into(settings.area->bounds, c.last);
        }
        report.corrected_cursor = c.last;
    }
    if (!trial || fraction == 0.0) return report;
    commit(scene, *trial);
    report.moved = true;
    report.applied_rotation = applied;
    return report;
}

std::optional<ReleaseInfo> Mover::release(Scene&, Point) {
    if (!state_) return std::nullopt;
    ReleaseInfo info{state_->object_id, state_->node_index, state_->total_displacement, state_->total_rotation};
    state_.reset();
    return info;
}

std::optional<CaughtInfo> Mover::caught_info() const {
    if (!state_) return std::nullopt;
    return CaughtInfo{state_->object_id, state_->node_index, state_->button};
}

std::optional<Point> Mover::grab_point() const {
    if (!state_) return std::nullopt;
    return state_->last;
}

}  // namespace movable
