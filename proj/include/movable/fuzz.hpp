#pragma once
/**
 * @file fuzz.hpp
 * @brief Seeded random pointer sessions with invariant checks.
 *
 * Events are generated against the live scene (presses aim at objects
 * where they currently are), applied through the mover and checked after
 * every step. The recorded trace replays to the same final scene.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "movable/scene.hpp"
#include "movable/trace.hpp"

namespace movable {

struct FuzzOptions {
    std::size_t events = 1000;
    std::uint64_t seed = 1;
    /// Aim presses at this object only.
    std::optional<std::string> focus;
};

struct FuzzResult {
    std::vector<TraceEvent> trace;
    Scene final_scene;
    /// "event N: ..." for every broken invariant.
    std::vector<std::string> violations;
};

/// Pairs whose footprints overlap and that the overlap rule forbids,
/// found by brute force over all pairs. Each pair is "a|b" with the ids in
/// lexicographic order.
std::vector<std::string> forbidden_overlaps(const Scene& scene);

FuzzResult run_fuzz(const Scene& scene, const FuzzOptions& options);

}  // namespace movable
