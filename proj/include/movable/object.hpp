#pragma once
/**
 * @file object.hpp
 * @brief The contract every movable object fulfils.
 *
 * An object describes its own anatomy: an ordered list of cover nodes, each
 * tagged with the handle it drives (body, vertex, edge, band...). The mover
 * only ever talks to objects through this interface: it hit-tests the cover,
 * remembers the handle, and forwards pointer motion as translate / move_node
 * / rotate calls.
 */

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "movable/cover.hpp"
#include "movable/footprint.hpp"
#include "movable/geometry.hpp"

namespace movable {

enum class ObjectKind {
    SolitaryLine,
    SegmentedLine,
    Rect,
    Circle,
    Ring,
    RegularPolygon,
    ConvexPolygon,
    ChatoyantPolygon,
    Sector,
    Crescent,
    TextM,
    TextMR,
    SimpleHouse,
    ElasticGroup,
};

std::string_view kind_name(ObjectKind kind);
std::optional<ObjectKind> kind_from_name(std::string_view name);

enum class HandleKind {
    Body,
    Vertex,
    Center,
    Edge,
    Corner,
    Band,
    OuterBand,
    InnerBand,
    Hole,
    Bite,
    Partition,
    Arc,
    SideStart,
    SideEnd,
    Apex,
    Title,
};

/// What a cover node drives; the index selects a vertex, edge, partition...
struct Handle {
    HandleKind kind = HandleKind::Body;
    std::size_t index = 0;

    friend bool operator==(const Handle&, const Handle&) = default;
};

struct CoverEntry {
    CoverNode node;
    Handle handle;
};

/// Personal size restrictions of one object. Extents apply to boxy shapes,
/// radii to round ones.
struct SizeLimits {
    Vector min_size{1.0, 1.0};
    Vector max_size{1e6, 1e6};
    double min_radius = 1.0;
    double max_radius = 1e6;
};

bool limits_valid(const SizeLimits& limits);

struct EditContext {
    /// Validate-before-commit. With safe off, proposals commit unchecked and
    /// validate() reports what broke.
    bool safe = true;
};

enum class EditResult { Applied, Rejected, Vanished };

class MovableObject {
public:
    explicit MovableObject(std::string id);
    virtual ~MovableObject() = default;

    const std::string& id() const { return id_; }

    bool movable() const { return movable_; }
    void set_movable(bool value) { movable_ = value; }

    virtual bool rotatable() const { return rotatable_; }
    void set_rotatable(bool value) { rotatable_ = value; }

    const std::optional<std::string>& color_class() const { return color_class_; }
    void set_color_class(std::optional<std::string> color) { color_class_ = std::move(color); }

    const std::optional<SizeLimits>& limits() const { return limits_; }
    void set_limits(std::optional<SizeLimits> limits) { limits_ = limits; }

    virtual ObjectKind kind() const = 0;

    /// Cover nodes in hit order, each with the handle it drives.
    virtual std::vector<CoverEntry> anatomy() const = 0;

    /// The cover alone. Immovable objects still catch the pointer, so their
    /// nodes come back Frozen rather than missing.
    Cover build_cover() const;

    /// Throws ImmovableObject when movable() is false.
    void translate(Vector delta);

    /// Drag of one handle from @p from to @p to (pointer positions).
    /// Throws ImmovableObject when movable() is false.
    EditResult move_node(const Handle& handle, Point from, Point to, const EditContext& ctx = {});

    /// Throws NotRotatable unless rotatable() and movable().
    void rotate(Point pivot, Angle delta);

    virtual Point rotation_center() const = 0;

    /// Every point that pins down the geometry (vertices, centers, marks).
    virtual std::vector<Point> defining_points() const = 0;

    /// Fixed point of the object used to glue the cursor to a grab point.
    Point anchor() const { return defining_points().front(); }

    virtual Box bounds() const = 0;

    /// The object's own area (what the user sees as "inside").
    virtual bool interior_contains(Point pt) const = 0;

    virtual Footprint footprint() const = 0;

    /// Human-readable invariant violations; empty when valid.
    virtual std::vector<std::string> validate() const;

    virtual std::unique_ptr<MovableObject> clone() const = 0;

protected:
    MovableObject(const MovableObject&) = default;
    MovableObject& operator=(const MovableObject&) = default;

    virtual void do_translate(Vector delta) = 0;
    virtual EditResult do_move_node(const Handle& handle, Point from, Point to,
                                    const EditContext& ctx) = 0;
    virtual void do_rotate(Point pivot, double radians) = 0;

    double clamp_radius_to_limits(double r) const;
    Vector clamp_size_to_limits(Vector size) const;

private:
    std::string id_;
    bool movable_ = true;
    bool rotatable_ = true;
    std::optional<std::string> color_class_;
    std::optional<SizeLimits> limits_;
};

/// Collects cover entries, orienting polygons counterclockwise and skipping
/// pieces that degenerate (zero-length strips, flat polygons). Degenerate
/// pieces only occur transiently in unsafe mode.
class CoverBuilder {
public:
    void circle(Point center, double radius, NodeBehavior behavior, CursorHint cursor, Handle handle);
    void polygon(std::vector<Point> vertices, NodeBehavior behavior, CursorHint cursor, Handle handle);
    void strip(Point a, Point b, double halfwidth, NodeBehavior behavior, CursorHint cursor,
               Handle handle);
    void nodes(const std::vector<CoverNode>& nodes, Handle handle);

    std::vector<CoverEntry> take() { return std::move(entries_); }

private:
    std::vector<CoverEntry> entries_;
};

}  // namespace movable
