#pragma once
/**
 * @file restrictions.hpp
 * @brief Constraints applied between a proposed motion and its commit.
 *
 * Touching is always allowed; only interior overlap is forbidden. Pairs that
 * already overlap before a motion are left alone, so a scene loaded in a
 * violating state never locks up.
 */

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "movable/footprint.hpp"
#include "movable/geometry.hpp"
#include "movable/object.hpp"

namespace movable {

class Scene;

struct AreaRestriction {
    enum class Mode { GrabPointInside, WholeObjectInside };

    Box bounds;
    Mode mode = Mode::GrabPointInside;

    friend bool operator==(const AreaRestriction&, const AreaRestriction&) = default;
};

struct OverlapRule {
    enum class Mode { Off, SameColorForbidden, AllForbidden };

    Mode mode = Mode::Off;
    /// Objects that block every other object whenever the mode is not Off.
    std::vector<std::string> obstacles;

    friend bool operator==(const OverlapRule&, const OverlapRule&) = default;
};

/// Step between path samples of a translation, in scene units.
inline constexpr double kSlideSampleStep = 0.5;
/// Resolution of the stopping point of a blocked motion.
inline constexpr double kSlideTolerance = 1e-6;

/// Clamps each axis of @p proposed so that @p geometry shifted by the result
/// stays inside the area. Axes already outside may only move back in.
Vector clamp_translation(const Box& geometry, Vector proposed, const AreaRestriction& area);

Vector clamp_dimensions(Vector dims, const SizeLimits& limits);
double clamp_radius(double radius, const SizeLimits& limits);

/// Whether the rule forbids interior overlap of @p a and @p b.
bool pair_forbidden(const MovableObject& a, const MovableObject& b, const OverlapRule& rule);

/// True when @p proposed (a footprint for object @p id) overlaps nothing the
/// rule forbids. Objects carried along with @p id are not obstacles.
bool overlap_permitted(const Scene& scene, const std::string& id, const Footprint& proposed,
                       const OverlapRule& rule);

/// Longest permitted prefix of @p proposed for @p id and everything it
/// carries, plus one level of sliding along the blocking obstacle.
Vector constrained_slide(const Scene& scene, const std::string& id, Vector proposed, const OverlapRule& rule);

/// Where the pointer belongs so that it stays glued to the grab point.
Point adhered_cursor(const MovableObject& object, Vector grab_offset);

/// Precomputed overlap test for a group of moving objects against the rest
/// of the scene.
class OverlapProbe {
public:
    OverlapProbe(const Scene& scene, const std::vector<const MovableObject*>& moving, const OverlapRule& rule);

    /// Nothing in the scene can block the moving objects.
    bool trivial() const { return statics_.empty(); }

    /// Moving footprints shifted by @p shift.
    bool permitted(Vector shift) const;
    /// Replacement footprints, one per moving object in construction order.
    bool permitted(const std::vector<Footprint>& moving) const;

    /// Unit normal of the first newly blocking contact at @p shift, pointing
    /// away from the obstacle.
    std::optional<Vector> blocking_normal(Vector shift) const;

    /// Longest permitted prefix of @p d starting from @p base.
    Vector prefix(Vector base, Vector d) const;

    /// Prefix of @p proposed, then the part of the remainder tangent to the
    /// blocking obstacle (passed through @p limit first, if given).
    Vector slide(Vector proposed, const std::function<Vector(Vector, Vector)>& limit = {}) const;

private:
    struct Prefix {
        Vector allowed;
        /// Fraction of the motion where the first blocked placement was found.
        std::optional<double> blocked_at;
    };

    Prefix prefix_of(Vector base, Vector d) const;

    struct Body {
        Footprint fp;
        Box box;
    };

    std::optional<std::pair<std::size_t, std::size_t>> first_conflict(const std::vector<Body>& moving) const;
    std::vector<Body> shifted(Vector shift) const;

    std::vector<Body> moving_;
    std::vector<Body> statics_;
    /// forbidden_[i][j]: moving i may not overlap static j.
    std::vector<std::vector<bool>> forbidden_;
};

}  // namespace movable
