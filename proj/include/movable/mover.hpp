#pragma once
/**
 * @file mover.hpp
 * @brief The press / move / release state machine.
 *
 * One mover per scene. A press walks the display order from the top, hit
 * tests covers, passes through transparent nodes and catches the first
 * object that answers. Motion is processed per event against the previous
 * (possibly corrected) pointer position.
 */

#include <optional>
#include <string>

#include "movable/geometry.hpp"
#include "movable/object.hpp"

namespace movable {

class Scene;

enum class PointerButton { Primary, Secondary };

struct CatchResult {
    bool caught = false;
    std::optional<std::string> object_id;
    std::optional<std::size_t> node_index;
};

struct MoveReport {
    bool moved = false;
    /// Set when restrictions shortened the motion: where the pointer belongs.
    std::optional<Point> corrected_cursor;
    /// Translation for whole moves, pointer motion used for node moves.
    Vector applied_delta;
    double applied_rotation = 0.0;
    /// The caught rectangle collapsed and left the scene.
    bool vanished = false;
};

struct ReleaseInfo {
    std::string object_id;
    std::size_t node_index = 0;
    Vector total_displacement;
    /// Plain sum of applied angles, not normalized.
    double total_rotation = 0.0;
};

struct CaughtInfo {
    std::string object_id;
    std::size_t node_index = 0;
    PointerButton button = PointerButton::Primary;
};

class Mover {
public:
    /// Throws ProtocolViolation when something is already caught.
    CatchResult catch_at(Scene& scene, Point pt, PointerButton button);
    /// No-op report when idle.
    MoveReport move_to(Scene& scene, Point pt);
    /// Absent when idle. The release point itself moves nothing.
    std::optional<ReleaseInfo> release(Scene& scene, Point pt);

    std::optional<CaughtInfo> caught_info() const;
    bool is_caught() const { return state_.has_value(); }
    /// Pointer position the caught object is glued to.
    std::optional<Point> grab_point() const;
    /// Drops the catch without a release (the object left the scene).
    void cancel() { state_.reset(); }

private:
    enum class Mode { Immobile, Whole, Node, Rotate };

    struct Caught {
        std::string object_id;
        std::size_t node_index = 0;
        Handle handle;
        PointerButton button = PointerButton::Primary;
        Mode mode = Mode::Immobile;
        Vector grab_offset;
        Point last;
        Vector total_displacement;
        double total_rotation = 0.0;
    };

    MoveReport move_whole(Scene& scene, Caught& c, Point pt);
    MoveReport move_node(Scene& scene, Caught& c, Point pt);
    MoveReport rotate(Scene& scene, Caught& c, Point pt);

    std::optional<Caught> state_;
};

}  // namespace movable
