#pragma once
/**
 * @file layout.hpp
 * @brief Canonical text documents for scenes.
 *
 * A document starts with the version header, holds a settings block, one
 * block per object in display order, one line per comment pair, and ends
 * with a terminator line. Keys appear in a fixed order; reals carry 17
 * significant digits, so a canonical document survives a load/save cycle
 * byte for byte.
 *
 * @code
 * movable-layout 1
 * settings {
 *   raise_on_catch true
 *   ...
 * }
 * object circle "c1" {
 *   movable true
 *   ...
 * }
 * comment "c1" "note" box 60
 * end
 * @endcode
 */

#include <string>
#include <string_view>

#include "movable/scene.hpp"

namespace movable {

inline constexpr std::string_view kLayoutHeader = "movable-layout 1";

/// 17 significant digits; reads back as exactly @p value.
std::string format_real(double value);

std::string serialize(const Scene& scene);

/// Throws MalformedDocument with the offending line number. Structural
/// problems a parser cannot see (stale frames, broken invariants) are left
/// to Scene::validate().
Scene deserialize(std::string_view document);

}  // namespace movable
