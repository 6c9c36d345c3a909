#pragma once
/**
 * @file cover.hpp
 * @brief Covers: the ordered sets of sensitive nodes that define where an
 * object reacts to the pointer and how.
 *
 * A node is a circle, a convex polygon or a strip (a segment with rounded
 * ends). All node regions are closed: boundary points are inside. Nodes are
 * checked in order and the first one containing the pointer wins, so covers
 * list their most specific handles first.
 */

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "movable/geometry.hpp"

namespace movable {

/// Slack for boundary tests so points computed on an edge stay inside.
inline constexpr double kContainTolerance = 1e-9;

struct CircleShape {
    Point center;
    double radius = 0.0;
};

/// Strictly convex, counterclockwise.
struct PolygonShape {
    std::vector<Point> vertices;
};

/// Stadium: every point within halfwidth of segment ab.
struct StripShape {
    Point a;
    Point b;
    double halfwidth = 0.0;
};

using NodeShape = std::variant<CircleShape, PolygonShape, StripShape>;

enum class NodeBehavior { WholeMove, NodeMove, Frozen, Transparent };

enum class CursorHint { Move, ResizeHorizontal, ResizeVertical, ResizeDiagonal, Rotate, Default };

struct CoverNode {
    NodeShape shape;
    NodeBehavior behavior = NodeBehavior::WholeMove;
    CursorHint cursor = CursorHint::Move;
};

struct Cover {
    std::vector<CoverNode> nodes;
};

struct HitInfo {
    std::size_t index = 0;
    NodeBehavior behavior = NodeBehavior::WholeMove;
    CursorHint cursor = CursorHint::Default;
};

/// Throws InvalidGeometry when the node shape breaks its invariants.
void check_node(const CoverNode& node);
bool is_valid_node(const CoverNode& node);

bool contains(const CoverNode& node, Point pt);

/// First node (lowest index) containing @p pt.
std::optional<HitInfo> hit(const Cover& cover, Point pt);

/// Smallest node count that leaves no gap on a full circle: n >= pi*r/band.
std::size_t min_arc_band_count(double radius, double band);

/**
 * Covers the circle of @p radius around @p center with @p n circular nodes
 * of radius @p band, centers equally spaced starting at angle 0.
 *
 * Throws InvalidGeometry unless radius > band > 0, and InsufficientCover
 * when n is below min_arc_band_count.
 */
std::vector<CoverNode> arc_band_nodes(Point center, double radius, double band, std::size_t n,
                                      NodeBehavior behavior,
                                      CursorHint cursor = CursorHint::ResizeDiagonal);

/// Nodes along the partial arc [start, start + sweep], spaced so that
/// adjacent circles overlap by at least half a band.
std::vector<CoverNode> arc_segment_nodes(Point center, double radius, double band, double start,
                                         double sweep, NodeBehavior behavior,
                                         CursorHint cursor = CursorHint::ResizeDiagonal);

}  // namespace movable
