#include "movable/restrictions.hpp"

#include <algorithm>
#include <cmath>

#include "movable/scene.hpp"

namespace movable {

namespace {

/// Largest shift along one axis keeping [lo, hi] + shift inside [bmin, bmax].
double clamp_axis(double lo, double hi, double d, double bmin, double bmax) {
    if (d > 0.0) {
        if (hi + d <= bmax) return d;
        if (hi >= bmax) return 0.0;
        double a = bmax - hi;
        while (a > 0.0 && hi + a > bmax) a = std::nextafter(a, 0.0);
        return std::min(a, d);
    }
    if (d < 0.0) {
        if (lo + d >= bmin) return d;
        if (lo <= bmin) return 0.0;
        double a = bmin - lo;
        while (a < 0.0 && lo + a < bmin) a = std::nextafter(a, 0.0);
        return std::max(a, d);
    }
    return d;
}

bool boxes_apart(const Box& a, const Box& b) {
    return a.max_x <= b.min_x || b.max_x <= a.min_x || a.max_y <= b.min_y || b.max_y <= a.min_y;
}

bool is_obstacle(const OverlapRule& rule, const std::string& id) {
    return std::find(rule.obstacles.begin(), rule.obstacles.end(), id) != rule.obstacles.end();
}

}  // namespace

Vector clamp_translation(const Box& geometry, Vector proposed, const AreaRestriction& area) {
    return {clamp_axis(geometry.min_x, geometry.max_x, proposed.x, area.bounds.min_x, area.bounds.max_x),
            clamp_axis(geometry.min_y, geometry.max_y, proposed.y, area.bounds.min_y, area.bounds.max_y)};
}

Vector clamp_dimensions(Vector dims, const SizeLimits& limits) {
    return {std::clamp(dims.x, limits.min_size.x, limits.max_size.x),
            std::clamp(dims.y, limits.min_size.y, limits.max_size.y)};
}

double clamp_radius(double radius, const SizeLimits& limits) {
    return std::clamp(radius, limits.min_radius, limits.max_radius);
}

bool pair_forbidden(const MovableObject& a, const MovableObject& b, const OverlapRule& rule) {
    if (rule.mode == OverlapRule::Mode::Off || a.id() == b.id()) return false;
    if (a.kind() == ObjectKind::ElasticGroup || b.kind() == ObjectKind::ElasticGroup) return false;
    if (is_obstacle(rule, a.id()) || is_obstacle(rule, b.id())) return true;
    if (rule.mode == OverlapRule::Mode::AllForbidden) return true;
    return a.color_class() && b.color_class() && *a.color_class() == *b.color_class();
}

bool overlap_permitted(const Scene& scene, const std::string& id, const Footprint& proposed,
                       const OverlapRule& rule) {
    if (rule.mode == OverlapRule::Mode::Off) return true;
    const MovableObject& self = scene.get(id);
    const auto carried = scene.carried_ids(id);
    const Box box = bounds(proposed);
    for (const auto& other : scene.objects()) {
        if (std::find(carried.begin(), carried.end(), other->id()) != carried.end()) continue;
        if (!pair_forbidden(self, *other, rule)) continue;
        const Footprint fp = other->footprint();
        if (boxes_apart(box, bounds(fp))) continue;
        if (interior_overlap(proposed, fp)) return false;
    }
    return true;
}

Vector constrained_slide(const Scene& scene, const std::string& id, Vector proposed, const OverlapRule& rule) {
    std::vector<const MovableObject*> moving;
    for (const auto& carried : scene.carried_ids(id)) moving.push_back(&scene.get(carried));
    const OverlapProbe probe(scene, moving, rule);
    return probe.slide(proposed);
}

Point adhered_cursor(const MovableObject& object, Vector grab_offset) { return object.anchor() + grab_offset; }

// OverlapProbe ---------------------------------------------------------------

OverlapProbe::OverlapProbe(const Scene& scene, const std::vector<const MovableObject*>& moving,
                           const OverlapRule& rule) {
    for (const MovableObject* m : moving) {
        Footprint fp = m->footprint();
        const Box box = bounds(fp);
        moving_.push_back({std::move(fp), box});
    }
    if (rule.mode == OverlapRule::Mode::Off) return;
    forbidden_.resize(moving.size());
    for (const auto& other : scene.objects()) {
        const bool is_moving = std::any_of(moving.begin(), moving.end(),
                                           [&](const MovableObject* m) { return m->id() == other->id(); });
        if (is_moving) continue;
        std::vector<bool> row(moving.size(), false);
        bool any = false;
        Body body;
        bool computed = false;
        for (std::size_t i = 0; i < moving.size(); ++i) {
            if (!pair_forbidden(*moving[i], *other, rule)) continue;
            if (!computed) {
                body.fp = other->footprint();
                body.box = bounds(body.fp);
                computed = true;
            }
            // Pairs that already overlap are left alone.
            const bool overlapping =
                !boxes_apart(moving_[i].box, body.box) && interior_overlap(moving_[i].fp, body.fp);
            row[i] = !overlapping;
            any = any || row[i];
        }
        if (!any) continue;
        statics_.push_back(std::move(body));
        for (std::size_t i = 0; i < moving.size(); ++i) forbidden_[i].push_back(row[i]);
    }
}

std::vector<OverlapProbe::Body> OverlapProbe::shifted(Vector shift) const {
    std::vector<Body> out;
    out.reserve(moving_.size());
    for (const Body& b : moving_) out.push_back({translated(b.fp, shift), b.box.translated(shift)});
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> OverlapProbe::first_conflict(
    const std::vector<Body>& moving) const {
    for (std::size_t i = 0; i < moving.size(); ++i) {
        for (std::size_t j = 0; j < statics_.size(); ++j) {
            if (!forbidden_[i][j] || boxes_apart(moving[i].box, statics_[j].box)) continue;
            if (interior_overlap(moving[i].fp, statics_[j].fp)) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

bool OverlapProbe::permitted(Vector shift) const {
    if (trivial()) return true;
    return !first_conflict(shifted(shift));
}

bool OverlapProbe::permitted(const std::vector<Footprint>& moving) const {
    if (trivial()) return true;
    std::vector<Body> bodies;
    bodies.reserve(moving.size());
    for (const Footprint& fp : moving) bodies.push_back({fp, bounds(fp)});
    return !first_conflict(bodies);
}

std::optional<Vector> OverlapProbe::blocking_normal(Vector shift) const {
    const auto bodies = shifted(shift);
    const auto conflict = first_conflict(bodies);
    if (!conflict) return std::nullopt;
    const Footprint& a = bodies[conflict->first].fp;
    const Footprint& b = statics_[conflict->second].fp;
    double deepest = 0.0;
    std::optional<Vector> normal;
    for (const Piece& pa : a) {
        for (const Piece& pb : b) {
            const double s = separation(pa, pb);
            if (s < deepest) {
                deepest = s;
                normal = contact_normal(pa, pb);
            }
        }
    }
    return normal;
}

OverlapProbe::Prefix OverlapProbe::prefix_of(Vector base, Vector d) const {
    if (trivial() || (d.x == 0.0 && d.y == 0.0)) return {d, std::nullopt};
    const double len = length(d);
    const auto samples = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / kSlideSampleStep)));
    double prev = 0.0;
    for (std::size_t k = 1; k <= samples; ++k) {
        const double s = k == samples ? 1.0 : static_cast<double>(k) / static_cast<double>(samples);
        if (permitted(base + d * s)) {
            prev = s;
            continue;
        }
        double lo = prev;
        double hi = s;
        while ((hi - lo) * len > kSlideTolerance) {
            const double mid = (lo + hi) / 2.0;
            (permitted(base + d * mid) ? lo : hi) = mid;
        }
        return {lo == 0.0 ? Vector{} : d * lo, hi};
    }
    return {d, std::nullopt};
}

Vector OverlapProbe::prefix(Vector base, Vector d) const { return prefix_of(base, d).allowed; }

Vector OverlapProbe::slide(Vector proposed, const std::function<Vector(Vector, Vector)>& limit) const {
    const Prefix first = prefix_of({}, proposed);
    if (!first.blocked_at) return first.allowed;
    const auto normal = blocking_normal(proposed * *first.blocked_at);
    if (!normal) return first.allowed;
    const Vector residual = proposed - first.allowed;
    Vector tangent = residual - *normal * dot(residual, *normal);
    if (limit) tangent = limit(first.allowed, tangent);
    const Vector extra = prefix_of(first.allowed, tangent).allowed;
    if (extra.x == 0.0 && extra.y == 0.0) return first.allowed;
    return first.allowed + extra;
}

}  // namespace movable
