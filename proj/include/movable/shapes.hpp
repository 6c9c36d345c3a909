#pragma once
/**
 * @file shapes.hpp
 * @brief The library of movable objects.
 *
 * Every class here builds its cover with the most specific handles first
 * (vertices and corners, then edges and bands, then partitions, then the
 * body) and interprets handle drags itself: resizing, reconfiguring,
 * scaling or sliding. Rotation pivots default to the object's center.
 */

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "movable/object.hpp"

namespace movable {

/// Halfwidth of border strips and bands.
inline constexpr double kBandHalfwidth = 3.0;
/// Radius of vertex and corner nodes.
inline constexpr double kHandleRadius = 5.0;
/// Visual half thickness of lines; also their footprint radius.
inline constexpr double kLineHalfThickness = 1.0;
/// Smallest radius any round shape keeps in safe mode.
inline constexpr double kMinRadius = 2.0;
/// Minimum separation between sliding parts (ring radii, partitions) in units.
inline constexpr double kMinGap = 1.0;
/// Smallest sector sweep, and distance of the sweep from a full turn.
inline constexpr double kMinSweep = 0.01;

// --------------------------------------------------------------------------
// Lines
// --------------------------------------------------------------------------

class SolitaryLine final : public MovableObject {
public:
    SolitaryLine(std::string id, Point a, Point b);

    Point a() const { return a_; }
    Point b() const { return b_; }

    ObjectKind kind() const override { return ObjectKind::SolitaryLine; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return (a_ + b_) / 2.0; }
    std::vector<Point> defining_points() const override { return {a_, b_}; }
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    Point a_;
    Point b_;
};

class SegmentedLine final : public MovableObject {
public:
    SegmentedLine(std::string id, std::vector<Point> points);

    const std::vector<Point>& points() const { return points_; }

    /// Moves one joint to @p pointer; neighbors stay. Rejected in safe mode
    /// when the joint would collapse onto a neighbor.
    EditResult reconfigure_vertex(std::size_t index, Point pointer, const EditContext& ctx = {});

    ObjectKind kind() const override { return ObjectKind::SegmentedLine; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override;
    std::vector<Point> defining_points() const override { return points_; }
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    std::vector<Point> points_;
};

// --------------------------------------------------------------------------
// Rectangles
// --------------------------------------------------------------------------

enum class RectSide { Left, Right, Bottom, Top };

struct RectPolicy {
    enum class Mode { Free, FixedRatio, Symmetric, SingleBorder };
    enum class Vanish { Clamp, Vanish };

    Mode mode = Mode::Free;
    /// width / height, kept by FixedRatio.
    double ratio = 1.0;
    /// The only movable border under SingleBorder.
    RectSide side = RectSide::Right;
    Vanish vanish = Vanish::Clamp;
    /// Smallest size under Clamp.
    Vector min_size{4.0, 4.0};

    friend bool operator==(const RectPolicy&, const RectPolicy&) = default;
};

/// Local corner order: 0 = left-bottom, 1 = right-bottom, 2 = right-top, 3 = left-top.
class Rect final : public MovableObject {
public:
    Rect(std::string id, Point center, double width, double height, RectPolicy policy = {});

    Point center() const { return center_; }
    double width() const { return width_; }
    double height() const { return height_; }
    double angle() const { return angle_; }
    const RectPolicy& policy() const { return policy_; }
    /// Partition positions as fractions of the width, strictly increasing in (0, 1).
    const std::vector<double>& partitions() const { return partitions_; }

    void set_angle(double radians) { angle_ = normalize_angle(radians); }
    void set_policy(const RectPolicy& policy) { policy_ = policy; }
    /// Positions are local abscissas measured from the left border.
    void set_partitions(const std::vector<double>& offsets_from_left);
    void set_partition_fractions(std::vector<double> fractions) { partitions_ = std::move(fractions); }
    /// Local abscissa of a partition measured from the left border.
    double partition_offset(std::size_t index) const;

    std::array<Point, 4> corners() const;
    bool handle_enabled(const Handle& h) const;

    /// Dragged corner or border follows @p pointer under the policy.
    EditResult resize(const Handle& h, Point pointer, const EditContext& ctx = {});
    /// The partition follows the pointer abscissa, kept kMinGap away from
    /// its neighbors and the side borders.
    void slide_partition(std::size_t index, Point pointer);

    Point to_local(Point p) const;
    Point to_world(Point local) const;

    ObjectKind kind() const override { return ObjectKind::Rect; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return center_; }
    std::vector<Point> defining_points() const override;
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    Point handle_position(const Handle& h) const;
    EditResult apply_extent(double left, double right, double bottom, double top, bool keep_center,
                            const EditContext& ctx);

    Point center_;
    double width_;
    double height_;
    double angle_ = 0.0;
    RectPolicy policy_;
    std::vector<double> partitions_;
};

// --------------------------------------------------------------------------
// Round shapes
// --------------------------------------------------------------------------

class Circle final : public MovableObject {
public:
    Circle(std::string id, Point center, double radius);

    Point center() const { return center_; }
    double radius() const { return radius_; }
    /// Orientation of the radius mark drawn on the circle.
    double angle() const { return angle_; }
    void set_angle(double radians) { angle_ = normalize_angle(radians); }

    /// Radius scaled by |pointer - center| / |before - center|; false when
    /// either point sits on the center.
    bool scale_uniform(Point before, Point pointer, const EditContext& ctx = {});

    ObjectKind kind() const override { return ObjectKind::Circle; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return center_; }
    std::vector<Point> defining_points() const override;
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    Point center_;
    double radius_;
    double angle_ = 0.0;
};

enum class RingBoundary { Inner, Outer };

class Ring final : public MovableObject {
public:
    Ring(std::string id, Point center, double r_inner, double r_outer,
         std::vector<double> partitions = {});

    Point center() const { return center_; }
    double r_inner() const { return r_inner_; }
    double r_outer() const { return r_outer_; }
    /// Angles; the first lies in [-pi, pi), the rest increase within one turn.
    const std::vector<double>& partitions() const { return partitions_; }

    /// Sets the selected radius to |pointer - center|, clamped so that
    /// 0 < r_inner < r_outer with a gap of at least kMinGap.
    EditResult resize(RingBoundary boundary, Point pointer, const EditContext& ctx = {});
    bool scale_uniform(Point before, Point pointer, const EditContext& ctx = {});
    /// The partition follows the pointer's polar angle, clamped between its
    /// angular neighbors (kMinGap of arc at the outer radius).
    void slide_partition(std::size_t index, Point pointer);

    ObjectKind kind() const override { return ObjectKind::Ring; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return center_; }
    std::vector<Point> defining_points() const override;
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    EditResult set_radius(RingBoundary boundary, double radius, const EditContext& ctx);
    void set_partition_angle(std::size_t index, double angle);
    void canonicalize_partitions();

    Point center_;
    double r_inner_;
    double r_outer_;
    std::vector<double> partitions_;
};

enum class SectorPolicy { Fixed, ArcOnly, OneSide, Full };
enum class SectorPart { Arc, SideStart, SideEnd };

/// Sector from start_angle counterclockwise through sweep. OneSide frees the
/// arc and the end side.
class Sector final : public MovableObject {
public:
    Sector(std::string id, Point center, double radius, double start_angle, double sweep,
           SectorPolicy policy = SectorPolicy::Full);

    Point center() const { return center_; }
    double radius() const { return radius_; }
    double start_angle() const { return start_; }
    double sweep() const { return sweep_; }
    SectorPolicy policy() const { return policy_; }

    bool part_enabled(SectorPart part) const;
    /// Throws DisabledPart when the policy freezes @p part.
    EditResult resize(SectorPart part, Point pointer, const EditContext& ctx = {});

    ObjectKind kind() const override { return ObjectKind::Sector; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return center_; }
    std::vector<Point> defining_points() const override;
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    EditResult set_radius(double radius, const EditContext& ctx);
    EditResult turn_side(SectorPart part, double delta, const EditContext& ctx);

    Point center_;
    double radius_;
    double start_;
    double sweep_;
    SectorPolicy policy_;
};

/// Outer disk minus an intersecting bite disk.
class Crescent final : public MovableObject {
public:
    Crescent(std::string id, Point center, double radius, Vector bite_offset, double bite_radius);

    Point center() const { return center_; }
    double radius() const { return radius_; }
    Vector bite_offset() const { return bite_offset_; }
    double bite_radius() const { return bite_radius_; }
    Point bite_center() const { return center_ + bite_offset_; }

    bool scale_uniform(Point before, Point pointer, const EditContext& ctx = {});

    ObjectKind kind() const override { return ObjectKind::Crescent; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return center_; }
    std::vector<Point> defining_points() const override;
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    bool horns(Point& first, Point& second) const;

    Point center_;
    double radius_;
    Vector bite_offset_;
    double bite_radius_;
};

// --------------------------------------------------------------------------
// Polygons
// --------------------------------------------------------------------------

class RegularPolygon final : public MovableObject {
public:
    RegularPolygon(std::string id, Point center, double radius, std::size_t sides, double angle = 0.0);

    Point center() const { return center_; }
    double radius() const { return radius_; }
    std::size_t sides() const { return sides_; }
    double angle() const { return angle_; }
    std::vector<Point> vertices() const;

    bool scale_uniform(Point before, Point pointer, const EditContext& ctx = {});

    ObjectKind kind() const override { return ObjectKind::RegularPolygon; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return center_; }
    std::vector<Point> defining_points() const override;
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    Point center_;
    double radius_;
    std::size_t sides_;
    double angle_;
};

/// A polygon that stays strictly convex under every vertex drag.
class ConvexPolygon final : public MovableObject {
public:
    ConvexPolygon(std::string id, std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }

    /// Moves the vertex toward @p pointer, stopping at the farthest point
    /// along the way that keeps the polygon convex (safe mode), with every
    /// vertex at least 1e-6 off the chord of its neighbors.
    EditResult reconfigure_vertex(std::size_t index, Point pointer, const EditContext& ctx = {});
    bool scale_uniform(Point before, Point pointer, const EditContext& ctx = {});

    ObjectKind kind() const override { return ObjectKind::ConvexPolygon; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override;
    std::vector<Point> defining_points() const override { return vertices_; }
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    std::vector<Point> vertices_;
};

/// Fan of triangles from a central point to a closed vertex chain. Any
/// vertex or the center can go anywhere, including turning inside out.
class ChatoyantPolygon final : public MovableObject {
public:
    ChatoyantPolygon(std::string id, Point center, std::vector<Point> vertices);

    Point center() const { return center_; }
    const std::vector<Point>& vertices() const { return vertices_; }

    EditResult reconfigure_vertex(std::size_t index, Point pointer);
    void move_center(Point pointer);
    bool scale_uniform(Point before, Point pointer, const EditContext& ctx = {});

    /// Non-degenerate fan triangles (center, v[i], v[i+1]).
    std::vector<std::array<Point, 3>> triangles() const;

    ObjectKind kind() const override { return ObjectKind::ChatoyantPolygon; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return center_; }
    std::vector<Point> defining_points() const override;
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    Point center_;
    std::vector<Point> vertices_;
};

// --------------------------------------------------------------------------
// Texts and the house
// --------------------------------------------------------------------------

/// A string payload occupying a box of 0.6 * font_size per character by
/// font_size. TextM only moves; TextMR also rotates.
class Text final : public MovableObject {
public:
    Text(std::string id, std::string text, Point center, double font_size, bool rotatable_text);

    const std::string& text() const { return text_; }
    Point center() const { return center_; }
    double font_size() const { return font_size_; }
    double angle() const { return angle_; }
    double box_width() const;
    void set_angle(double radians) { angle_ = normalize_angle(radians); }
    std::array<Point, 4> corners() const;

    bool rotatable() const override { return kind_ == ObjectKind::TextMR; }
    ObjectKind kind() const override { return kind_; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return center_; }
    std::vector<Point> defining_points() const override;
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    std::string text_;
    Point center_;
    double font_size_;
    double angle_ = 0.0;
    ObjectKind kind_;
};

/// Axis-aligned rectangular body with a free roof apex above it.
class SimpleHouse final : public MovableObject {
public:
    SimpleHouse(std::string id, Box body, Point apex);

    const Box& body() const { return body_; }
    Point apex() const { return apex_; }

    /// Apex follows the pointer, kept at least kMinGap above the body top.
    EditResult move_apex(Point pointer, const EditContext& ctx = {});
    /// Corner (index as in Rect) or edge (RectSide) of the body follows the pointer.
    EditResult resize(const Handle& h, Point pointer, const EditContext& ctx = {});

    bool rotatable() const override { return false; }
    ObjectKind kind() const override { return ObjectKind::SimpleHouse; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return body_.center(); }
    std::vector<Point> defining_points() const override;
    Box bounds() const override;
    bool interior_contains(Point pt) const override;
    Footprint footprint() const override;
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override;
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point pivot, double radians) override;

private:
    Point handle_position(const Handle& h) const;

    Box body_;
    Point apex_;
};

// --------------------------------------------------------------------------
// Shape-level operations
// --------------------------------------------------------------------------

/// Throws DisabledHandle for handles the policy does not expose and
/// Vanished when the rectangle collapses under the Vanish policy.
bool resize_rect(Rect& rect, const Handle& handle, Point pointer, const EditContext& ctx = {});

/// Scales circles, rings, crescents and polygons about their centers.
/// Returns false (no change) for degenerate input or unsupported shapes.
bool scale_uniform(MovableObject& object, Point border_point_before, Point pointer,
                   const EditContext& ctx = {});

/// Chatoyant / convex polygon vertex, segmented line joint or house apex
/// (any index) follows the pointer, clamped by the shape's rules.
void reconfigure_vertex(MovableObject& object, std::size_t vertex_index, Point pointer,
                        const EditContext& ctx = {});

void rotate_object(MovableObject& object, Point pivot, Angle delta);

void resize_ring(Ring& ring, RingBoundary boundary, Point pointer, const EditContext& ctx = {});

void resize_sector(Sector& sector, SectorPart part, Point pointer, const EditContext& ctx = {});

/// Rect or Ring partition; other shapes throw InvalidGeometry.
void slide_partition(MovableObject& container, std::size_t index, Point pointer);

}  // namespace movable
