#pragma once
/**
 * @file trace.hpp
 * @brief Recorded pointer sessions and their replay.
 *
 * One event per line: `seq kind button x y`, kind press|move|release,
 * button primary|secondary for presses and `-` otherwise. Blank lines and
 * lines starting with `#` are skipped.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "movable/mover.hpp"
#include "movable/scene.hpp"

namespace movable {

enum class TraceKind { Press, Move, Release };

struct TraceEvent {
    std::uint64_t seq = 0;
    TraceKind kind = TraceKind::Move;
    /// Presses only.
    std::optional<PointerButton> button;
    Point pos;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Throws MalformedTrace (with the line number) on syntax errors or when
/// check_trace() fails.
std::vector<TraceEvent> parse_trace(std::string_view text);
std::string format_trace(const std::vector<TraceEvent>& events);

/// Seq strictly increasing, presses carry a button and nothing else does,
/// no press while pressed, no release while released. A trace may end
/// with the button still down. Throws MalformedTrace.
void check_trace(const std::vector<TraceEvent>& events);

struct EventOutcome {
    /// Press events.
    std::optional<CatchResult> caught;
    /// Move events.
    std::optional<MoveReport> report;
    /// Release events that let something go.
    std::optional<ReleaseInfo> released;
};

struct ReplayReport {
    std::vector<EventOutcome> outcomes;
    Scene final_scene;
};

/// Runs the events through the scene's mover in order. Throws
/// MalformedTrace before touching the scene when check_trace() fails.
ReplayReport replay(Scene scene, const std::vector<TraceEvent>& events);

}  // namespace movable
