#pragma once
/**
 * @file groups.hpp
 * @brief Elastic groups and element/comment pairs.
 *
 * Groups and pairs refer to objects by id; the scene owns the objects. A
 * group's frame is derived: the scene recomputes it after every change.
 */

#include <string>
#include <vector>

#include "movable/object.hpp"

namespace movable {

class Scene;

struct Margins {
    double left = 0.0;
    double bottom = 0.0;
    double right = 0.0;
    double top = 0.0;

    friend bool operator==(const Margins&, const Margins&) = default;
};

/// Font size of group titles; the title box is sized like a Text.
inline constexpr double kTitleFontSize = 12.0;

class ElasticGroup final : public MovableObject {
public:
    ElasticGroup(std::string id, std::vector<std::string> members, Margins margins = {}, std::string title = {},
                 double title_offset = 0.5);

    const std::vector<std::string>& members() const { return members_; }
    const Margins& margins() const { return margins_; }
    const std::string& title() const { return title_; }
    double title_offset() const { return title_offset_; }
    const Box& frame() const { return frame_; }
    Point title_anchor() const;
    double title_width() const;

    void set_frame(const Box& frame) { frame_ = frame; }
    void remove_member(const std::string& id);
    /// Offset becomes the clamped fraction of @p x along the top edge.
    void slide_title(double x);

    bool rotatable() const override { return false; }
    ObjectKind kind() const override { return ObjectKind::ElasticGroup; }
    std::vector<CoverEntry> anatomy() const override;
    Point rotation_center() const override { return frame_.center(); }
    std::vector<Point> defining_points() const override;
    Box bounds() const override { return frame_; }
    bool interior_contains(Point pt) const override { return frame_.contains(pt); }
    /// Groups never take part in overlap rules.
    Footprint footprint() const override { return {}; }
    std::vector<std::string> validate() const override;
    std::unique_ptr<MovableObject> clone() const override;

protected:
    void do_translate(Vector d) override { frame_ = frame_.translated(d); }
    EditResult do_move_node(const Handle& h, Point from, Point to, const EditContext& ctx) override;
    void do_rotate(Point, double) override {}

private:
    std::vector<std::string> members_;
    Margins margins_;
    std::string title_;
    double title_offset_;
    Box frame_;
};

/// Where a comment may sit relative to its body's bounding box.
struct CommentRegion {
    enum class Kind { Free, Box, Radius };

    Kind kind = Kind::Free;
    /// Box: inflation of the body box. Radius: distance from the box center.
    double extent = 60.0;

    static CommentRegion free() { return {}; }
    static CommentRegion box(double margin = 60.0) { return {Kind::Box, margin}; }
    static CommentRegion radius(double r) { return {Kind::Radius, r}; }

    friend bool operator==(const CommentRegion&, const CommentRegion&) = default;
};

struct CommentedElement {
    std::string body;
    std::string comment;
    CommentRegion region;

    friend bool operator==(const CommentedElement&, const CommentedElement&) = default;
};

/// Closest admissible comment anchor to @p anchor.
Point clamp_to_region(const CommentRegion& region, const Box& body_bounds, Point anchor);
bool in_region(const CommentRegion& region, const Box& body_bounds, Point anchor, double tolerance = 1e-9);

/// Union of member bounds plus margins. Throws MissingMember.
Box frame_of(const ElasticGroup& group, const Scene& scene);

/// Members, their comments and the frame move together by @p delta.
void move_group(Scene& scene, const std::string& group_id, Vector delta);

/// One member (with its comments) moves; the frame follows.
void move_member(Scene& scene, const std::string& group_id, const std::string& member_id, Vector delta);

void slide_title(ElasticGroup& group, double pointer_x);

/// Moves the comment, clamped to its region. Returns the applied delta.
Vector move_comment(Scene& scene, const CommentedElement& pair, Vector delta);

}  // namespace movable
