#include "movable/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "movable/error.hpp"

namespace movable {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1); the mapping is fixed so runs agree everywhere.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(unit() * static_cast<double>(n)); }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

Box scene_view(const Scene& scene) {
    Box view = Box::empty();
    for (const auto& obj : scene.objects()) view = view.united(obj->bounds());
    if (scene.settings().area) view = view.united(scene.settings().area->bounds);
    if (view.is_empty()) view = {0.0, 0.0, 100.0, 100.0};
    return view.inflated(40.0);
}

Point random_in(Rng& rng, const Box& b) { return {rng.uniform(b.min_x, b.max_x), rng.uniform(b.min_y, b.max_y)}; }

/// A point on the object's cover where possible, else somewhere near it.
Point aim_at(Rng& rng, const MovableObject& obj) {
    const Cover cover = obj.build_cover();
    const Box box = obj.bounds().inflated(8.0);
    for (int attempt = 0; attempt < 24; ++attempt) {
        const Point p = random_in(rng, box);
        if (hit(cover, p)) return p;
    }
    return random_in(rng, box);
}

struct Check {
    std::set<std::string> overlaps_before;
    std::optional<std::string> caught_id;
    bool whole_primary = false;
    Point anchor_at_press;
};

}  // namespace

std::vector<std::string> forbidden_overlaps(const Scene& scene) {
    std::vector<std::string> pairs;
    const auto& objects = scene.objects();
    const OverlapRule& rule = scene.settings().overlap;
    if (rule.mode == OverlapRule::Mode::Off) return pairs;
    std::vector<Footprint> fps;
    std::vector<Box> boxes;
    for (const auto& obj : objects) {
        fps.push_back(obj->footprint());
        boxes.push_back(bounds(fps.back()));
    }
    for (std::size_t i = 0; i < objects.size(); ++i) {
        for (std::size_t j = i + 1; j < objects.size(); ++j) {
            if (!pair_forbidden(*objects[i], *objects[j], rule)) continue;
            if (!boxes[i].intersects(boxes[j])) continue;
            if (!interior_overlap(fps[i], fps[j])) continue;
            const auto& [a, b] = std::minmax(objects[i]->id(), objects[j]->id());
            pairs.push_back(a + "|" + b);
        }
    }
    return pairs;
}

FuzzResult run_fuzz(const Scene& initial, const FuzzOptions& options) {
    if (options.focus && !initial.contains(*options.focus)) {
        throw Error(ErrorCode::UnknownId, "no object '" + *options.focus + "' to focus on");
    }
    FuzzResult result;
    result.final_scene = initial;
    Scene& scene = result.final_scene;
    Rng rng(options.seed);
    const Box view = scene_view(scene);
    const auto& area = scene.settings().area;
    const bool grab_inside = area && area->mode == AreaRestriction::Mode::GrabPointInside;

    auto overlap_set = [&] {
        const auto v = forbidden_overlaps(scene);
        return std::set<std::string>(v.begin(), v.end());
    };
    auto violation = [&](std::size_t n, const std::string& what) {
        result.violations.push_back("event " + std::to_string(n) + ": " + what);
    };

    Check check;
    check.overlaps_before = overlap_set();
    Point pointer = view.center();
    bool down = false;
    std::size_t moves_left = 0;
    std::uint64_t seq = 0;

    for (std::size_t n = 1; n <= options.events; ++n) {
        TraceEvent e;
        e.seq = ++seq;
        if (!down) {
            if (rng.chance(0.15)) {
                // Stray motion while the button is up.
                e.kind = TraceKind::Move;
                pointer = random_in(rng, view);
            } else {
                e.kind = TraceKind::Press;
                e.button = rng.chance(0.25) ? PointerButton::Secondary : PointerButton::Primary;
                const auto& objects = scene.objects();
                if (options.focus) {
                    pointer = aim_at(rng, scene.get(*options.focus));
                } else if (!objects.empty() && rng.chance(0.85)) {
                    pointer = aim_at(rng, *objects[rng.index(objects.size())]);
                } else {
                    pointer = random_in(rng, view);
                }
                moves_left = 1 + rng.index(12);
                down = true;
            }
        } else if (moves_left > 0) {
            e.kind = TraceKind::Move;
            const double reach = rng.chance(0.05) ? 80.0 : 12.0;
            const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
            const double len = rng.uniform(0.0, reach);
            pointer = pointer + Vector{std::cos(angle), std::sin(angle)} * len;
            --moves_left;
        } else {
            e.kind = TraceKind::Release;
            down = false;
        }
        e.pos = pointer;
        result.trace.push_back(e);

        try {
            switch (e.kind) {
                case TraceKind::Press: {
                    const CatchResult c = scene.press(e.pos, *e.button);
                    if (c.caught) {
                        check.caught_id = c.object_id;
                        const MovableObject& obj = scene.get(*c.object_id);
                        const auto anatomy = obj.anatomy();
                        check.whole_primary = *e.button == PointerButton::Primary && obj.movable() &&
                                              obj.kind() != ObjectKind::ElasticGroup &&
                                              anatomy[*c.node_index].node.behavior == NodeBehavior::WholeMove;
                        check.anchor_at_press = obj.anchor();
                    }
                    break;
                }
                case TraceKind::Move: {
                    const MoveReport r = scene.move(e.pos);
                    if (r.vanished) check.caught_id.reset();
                    if (r.corrected_cursor) pointer = *r.corrected_cursor;
                    break;
                }
                case TraceKind::Release: {
                    const auto info = scene.release(e.pos);
                    if (check.caught_id && info && check.whole_primary && scene.contains(info->object_id)) {
                        const Vector moved = scene.get(info->object_id).anchor() - check.anchor_at_press;
                        if (length(moved - info->total_displacement) > 1e-9 * (1.0 + length(moved))) {
                            violation(n, "release total of '" + info->object_id + "' disagrees with its motion");
                        }
                    }
                    check.caught_id.reset();
                    break;
                }
            }
        } catch (const Error& err) {
            violation(n, std::string("engine error: ") + err.what());
            break;
        }

        if (scene.settings().safe) {
            for (const auto& issue : scene.validate()) violation(n, issue);
        }
        auto overlaps = overlap_set();
        for (const auto& pair : overlaps) {
            if (!check.overlaps_before.count(pair)) violation(n, "new forbidden overlap " + pair);
        }
        check.overlaps_before = std::move(overlaps);
        if (const auto info = scene.mover().caught_info()) {
            if (!scene.contains(info->object_id)) violation(n, "mover holds a missing object");
            if (grab_inside && !area->bounds.contains(*scene.mover().grab_point())) {
                violation(n, "grab point left the area");
            }
        } else if (check.caught_id && e.kind != TraceKind::Release) {
            violation(n, "mover dropped '" + *check.caught_id + "'");
            check.caught_id.reset();
        }
        if (result.violations.size() > 50) break;
    }
    return result;
}

}  // namespace movable
