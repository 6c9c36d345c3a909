#pragma once
/**
 * @file svg.hpp
 * @brief SVG snapshots of a scene.
 *
 * Objects are drawn in display order, each as one `<g class="object ...">`.
 * With covers on, every cover node follows its object as exactly one
 * element with `class="cover"`: circles as circles, polygons as polygons,
 * strips as stadium paths. Scene y points up; the document flips it.
 */

#include <string>

#include "movable/scene.hpp"

namespace movable {

std::string render_svg(const Scene& scene, bool show_covers);

}  // namespace movable
