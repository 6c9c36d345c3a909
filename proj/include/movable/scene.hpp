#pragma once
/**
 * @file scene.hpp
 * @brief Display-ordered object registry with its mover and restrictions.
 *
 * Index 0 is drawn first; the last object is on top. The scene is a single
 * owner of its objects and its mover; copies are deep.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "movable/groups.hpp"
#include "movable/mover.hpp"
#include "movable/object.hpp"
#include "movable/restrictions.hpp"

namespace movable {

struct SceneSettings {
    bool raise_on_catch = true;
    /// Validate-before-commit for node moves.
    bool safe = true;
    std::optional<AreaRestriction> area;
    OverlapRule overlap;

    friend bool operator==(const SceneSettings&, const SceneSettings&) = default;
};

class Scene {
public:
    Scene() = default;
    Scene(const Scene& other);
    Scene& operator=(const Scene& other);
    Scene(Scene&&) noexcept = default;
    Scene& operator=(Scene&&) noexcept = default;

    SceneSettings& settings() { return settings_; }
    const SceneSettings& settings() const { return settings_; }

    /// Throws DuplicateId.
    MovableObject& add_object(std::unique_ptr<MovableObject> object);
    template <typename T, typename... Args>
    T& add(Args&&... args) {
        return static_cast<T&>(add_object(std::make_unique<T>(std::forward<Args>(args)...)));
    }

    /// Also detaches the object from groups and comment pairs and cancels a
    /// catch on it. Groups left without members go too. Throws UnknownId.
    void remove_object(const std::string& id);
    /// Throws UnknownId.
    void pop_to_top(const std::string& id);
    /// Swaps in new geometry for an existing object, keeping its display slot.
    void replace_object(std::unique_ptr<MovableObject> object);

    bool contains(const std::string& id) const { return index_of_opt(id).has_value(); }
    MovableObject* find(const std::string& id);
    const MovableObject* find(const std::string& id) const;
    /// Throws UnknownId.
    MovableObject& get(const std::string& id);
    const MovableObject& get(const std::string& id) const;
    std::size_t index_of(const std::string& id) const;
    std::size_t size() const { return objects_.size(); }
    const std::vector<std::unique_ptr<MovableObject>>& objects() const { return objects_; }
    std::vector<std::string> display_order() const;

    /// Throws UnknownId when either side is missing.
    void add_comment(CommentedElement pair);
    const std::vector<CommentedElement>& comments() const { return comments_; }
    const CommentedElement* pair_of_comment(const std::string& comment_id) const;

    /// @p id plus everything that moves with it: its comments and, for
    /// groups, members recursively. Each id appears once.
    std::vector<std::string> carried_ids(const std::string& id) const;

    /// Unrestricted synchronous translation of @p id and everything it
    /// carries; frames are refreshed afterwards.
    void translate_carried(const std::string& id, Vector delta);

    /// Recomputes every group frame from its members.
    void refresh_groups();
    /// Pulls comments back into their regions (after a body resized).
    void enforce_comment_limits();

    /// Structural and geometric invariant violations; empty when valid.
    std::vector<std::string> validate() const;

    Mover& mover() { return mover_; }
    const Mover& mover() const { return mover_; }

    CatchResult press(Point pt, PointerButton button = PointerButton::Primary) {
        return mover_.catch_at(*this, pt, button);
    }
    MoveReport move(Point pt) { return mover_.move_to(*this, pt); }
    std::optional<ReleaseInfo> release(Point pt) { return mover_.release(*this, pt); }

private:
    std::optional<std::size_t> index_of_opt(const std::string& id) const;
    Box group_frame(const ElasticGroup& group, int depth) const;

    std::vector<std::unique_ptr<MovableObject>> objects_;
    std::vector<CommentedElement> comments_;
    SceneSettings settings_;
    Mover mover_;
};

}  // namespace movable
