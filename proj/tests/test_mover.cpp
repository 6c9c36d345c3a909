#include <gtest/gtest.h>

#include "movable/error.hpp"
#include "movable/scene.hpp"
#include "movable/shapes.hpp"
#include "support.hpp"

using namespace movable;
using movable::testing::Rng;

namespace {

HandleKind handle_at(const MovableObject& obj, std::size_t node) { return obj.anatomy().at(node).handle.kind; }

}  // namespace

TEST(Catch, LoneRectangleBody) {
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 20.0);
    const CatchResult c = s.press({0, 0});
    ASSERT_TRUE(c.caught);
    EXPECT_EQ(*c.object_id, "r");
    EXPECT_EQ(handle_at(s.get("r"), *c.node_index), HandleKind::Body);
    const auto info = s.mover().caught_info();
    ASSERT_TRUE(info);
    EXPECT_EQ(info->object_id, "r");
    EXPECT_EQ(info->node_index, *c.node_index);
    EXPECT_EQ(info->button, PointerButton::Primary);
}

TEST(Catch, RingHolePassesThroughToCircle) {
    Scene s;
    s.add<Circle>("below", Point{0, 0}, 10.0);
    s.add<Ring>("ring", Point{0, 0}, 30.0, 50.0);
    const CatchResult c = s.press({2, 1});
    ASSERT_TRUE(c.caught);
    EXPECT_EQ(*c.object_id, "below");
    // Same press with the ring gone.
    Scene without = s;
    without.mover().cancel();
    without.remove_object("ring");
    EXPECT_EQ(*without.press({2, 1}).object_id, "below");
}

TEST(Catch, CrescentBitePassesThrough) {
    Scene s;
    s.add<Rect>("below", Point{20, 0}, 10.0, 10.0);
    s.add<Crescent>("moon", Point{0, 0}, 40.0, Vector{20, 0}, 30.0);
    EXPECT_EQ(*s.press({20, 0}).object_id, "below");
    s.release({20, 0});
    EXPECT_EQ(*s.press({-30, 0}).object_id, "moon");
}

TEST(Catch, BackgroundCatchesNothing) {
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 20.0);
    EXPECT_FALSE(s.press({500, 500}).caught);
    EXPECT_FALSE(s.mover().caught_info());
    EXPECT_FALSE(s.release({500, 500}));
}

TEST(Catch, SecondPressIsAProtocolViolation) {
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 20.0);
    s.press({0, 0});
    try {
        s.press({1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ProtocolViolation);
    }
    EXPECT_EQ(s.mover().caught_info()->object_id, "r");
}

TEST(Catch, RaisesToTopUnlessDisabled) {
    Scene s;
    s.add<Rect>("a", Point{0, 0}, 40.0, 20.0);
    s.add<Rect>("b", Point{100, 0}, 40.0, 20.0);
    s.add<Rect>("c", Point{200, 0}, 40.0, 20.0);
    s.press({0, 0});
    EXPECT_EQ(s.display_order(), (std::vector<std::string>{"b", "c", "a"}));
    s.release({0, 0});
    s.settings().raise_on_catch = false;
    s.press({100, 0});
    EXPECT_EQ(s.display_order(), (std::vector<std::string>{"b", "c", "a"}));
}

TEST(Catch, ImmovableObjectBlocksAndStays) {
    Scene s;
    s.add<Rect>("below", Point{0, 0}, 40.0, 20.0);
    auto& top = s.add<Rect>("top", Point{0, 0}, 20.0, 10.0);
    top.set_movable(false);
    const CatchResult c = s.press({0, 0});
    EXPECT_EQ(*c.object_id, "top");
    const MoveReport r = s.move({30, 30});
    EXPECT_FALSE(r.moved);
    EXPECT_EQ(r.applied_delta, (Vector{0, 0}));
    EXPECT_EQ(static_cast<const Rect&>(s.get("top")).center(), (Point{0, 0}));
    EXPECT_EQ(*s.mover().grab_point(), (Point{0, 0}));
    EXPECT_EQ(s.release({30, 30})->total_displacement, (Vector{0, 0}));
}

TEST(Move, TranslatesByPointerDelta) {
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 30.0);
    s.press({10, 10});
    const MoveReport r = s.move({25, 30});
    EXPECT_TRUE(r.moved);
    EXPECT_EQ(r.applied_delta, (Vector{15, 20}));
    EXPECT_FALSE(r.corrected_cursor);
    EXPECT_EQ(static_cast<const Rect&>(s.get("r")).center(), (Point{15, 20}));
}

TEST(Move, IdleMoveIsANoOp) {
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 30.0);
    const MoveReport r = s.move({25, 30});
    EXPECT_FALSE(r.moved);
    EXPECT_EQ(static_cast<const Rect&>(s.get("r")).center(), (Point{0, 0}));
}

TEST(Move, CornerNodeResizes) {
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 20.0);
    const CatchResult c = s.press({20, 10});
    EXPECT_EQ(handle_at(s.get("r"), *c.node_index), HandleKind::Corner);
    s.move({30, 15});
    const auto& r = static_cast<const Rect&>(s.get("r"));
    EXPECT_DOUBLE_EQ(r.width(), 50.0);
    EXPECT_DOUBLE_EQ(r.height(), 25.0);
    EXPECT_EQ(r.corners()[0], (Point{-20, -10}));
}

TEST(Rotate, TextMRQuarterTurn) {
    Scene s;
    s.add<Text>("t", "rotate", Point{0, 0}, 12.0, true);
    const auto before = movable::testing::pairwise_distances(s.get("t"));
    ASSERT_TRUE(s.press({10, 0}, PointerButton::Secondary).caught);
    double sum = 0.0;
    const int steps = 100;
    for (int i = 1; i <= steps; ++i) {
        const double a = kPi / 2 * i / steps;
        sum += s.move({10 * std::cos(a), 10 * std::sin(a)}).applied_rotation;
    }
    EXPECT_NEAR(sum, kPi / 2, 1e-9);
    const auto info = s.release({0, 10});
    EXPECT_NEAR(info->total_rotation, kPi / 2, 1e-9);
    EXPECT_NEAR(static_cast<const Text&>(s.get("t")).angle(), kPi / 2, 1e-9);
    const auto after = movable::testing::pairwise_distances(s.get("t"));
    for (std::size_t i = 0; i < before.size(); ++i) EXPECT_NEAR(after[i], before[i], 1e-9);
}

TEST(Rotate, TextMRefusesRotation) {
    Scene s;
    s.add<Text>("t", "still", Point{0, 0}, 12.0, false);
    ASSERT_TRUE(s.press({5, 0}, PointerButton::Secondary).caught);
    EXPECT_FALSE(s.move({0, 5}).moved);
    EXPECT_EQ(static_cast<const Text&>(s.get("t")).angle(), 0.0);
    EXPECT_THROW(s.get("t").rotate({0, 0}, Angle(1.0)), Error);
}

TEST(Release, SumsAppliedDeltas) {
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 30.0);
    s.press({0, 0});
    s.move({1, 0});
    s.move({3, 0});
    s.move({6, 0});
    const auto info = s.release({100, 100});
    ASSERT_TRUE(info);
    EXPECT_EQ(info->total_displacement, (Vector{6, 0}));
    EXPECT_EQ(info->total_rotation, 0.0);
    EXPECT_FALSE(s.mover().caught_info());
    // The release point moves nothing.
    EXPECT_EQ(static_cast<const Rect&>(s.get("r")).center(), (Point{6, 0}));
}

TEST(Release, ImmediateReleaseHasZeroTotals) {
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 30.0);
    s.press({0, 0});
    const auto info = s.release({0, 0});
    EXPECT_EQ(info->total_displacement, (Vector{0, 0}));
    EXPECT_EQ(info->total_rotation, 0.0);
    EXPECT_FALSE(s.release({0, 0}));
}

TEST(Area, GrabPointStopsOnTheWall) {
    Scene s;
    s.settings().area = AreaRestriction{{0, 0, 100, 100}, AreaRestriction::Mode::GrabPointInside};
    s.add<Rect>("r", Point{50, 50}, 20.0, 20.0);
    s.press({50, 50});
    const MoveReport r = s.move({150, 50});
    EXPECT_TRUE(r.moved);
    EXPECT_EQ(r.applied_delta, (Vector{50, 0}));
    ASSERT_TRUE(r.corrected_cursor);
    EXPECT_EQ(*r.corrected_cursor, (Point{100, 50}));
    EXPECT_EQ(*s.mover().grab_point(), (Point{100, 50}));
    // Back inside: motion resumes from the adhered position.
    EXPECT_EQ(s.move({90, 50}).applied_delta, (Vector{-10, 0}));
}

TEST(Area, WholeObjectStopsOnTheWall) {
    Scene s;
    s.settings().area = AreaRestriction{{0, 0, 100, 100}, AreaRestriction::Mode::WholeObjectInside};
    s.add<Rect>("r", Point{50, 50}, 20.0, 20.0);
    s.press({50, 50});
    // Oracle: the right side (x = 60) meets the wall x = 100 after 40 units
    // along the ray.
    const MoveReport r = s.move({150, 50});
    EXPECT_EQ(r.applied_delta, (Vector{40, 0}));
    EXPECT_EQ(*r.corrected_cursor, (Point{90, 50}));
    // Diagonal push against the wall keeps the tangent part.
    const MoveReport d = s.move({190, 70});
    EXPECT_EQ(d.applied_delta, (Vector{0, 20}));
    EXPECT_EQ(*d.corrected_cursor, (Point{90, 70}));
    EXPECT_EQ(s.release({0, 0})->total_displacement, (Vector{40, 20}));
}

TEST(Area, PressOutsideCatchesNothingUnderGrabPointInside) {
    Scene s;
    s.settings().area = AreaRestriction{{0, 0, 100, 100}, AreaRestriction::Mode::GrabPointInside};
    s.add<Rect>("r", Point{100, 50}, 20.0, 20.0);
    EXPECT_FALSE(s.press({105, 50}).caught);
    EXPECT_TRUE(s.press({95, 50}).caught);
}

TEST(Vanish, CollapsedRectangleLeavesTheScene) {
    Scene s;
    RectPolicy p;
    p.vanish = RectPolicy::Vanish::Vanish;
    s.add<Rect>("r", Point{0, 0}, 40.0, 20.0, p);
    const CatchResult c = s.press({20, 0});
    EXPECT_EQ(handle_at(s.get("r"), *c.node_index), HandleKind::Edge);
    const MoveReport r = s.move({-30, 0});
    EXPECT_TRUE(r.vanished);
    EXPECT_FALSE(s.contains("r"));
    EXPECT_FALSE(s.mover().caught_info());
    EXPECT_FALSE(s.release({-30, 0}));
}

TEST(Vanish, ClampPolicyStopsAtMinimumSize) {
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 20.0);
    s.press({20, 0});
    s.move({-30, 0});
    const auto& r = static_cast<const Rect&>(s.get("r"));
    EXPECT_DOUBLE_EQ(r.width(), 4.0);
    EXPECT_DOUBLE_EQ(r.corners()[0].x, -20.0);
}

TEST(Scene, RemovingTheCaughtObjectIdlesTheMover) {
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 20.0);
    s.press({0, 0});
    s.remove_object("r");
    EXPECT_FALSE(s.mover().caught_info());
    EXPECT_FALSE(s.move({5, 5}).moved);
}

TEST(Overlap, StopsAtContactAndSlides) {
    Scene s;
    s.settings().overlap.mode = OverlapRule::Mode::AllForbidden;
    s.add<Rect>("wall", Point{100, 0}, 20.0, 200.0);
    s.add<Rect>("box", Point{0, 0}, 20.0, 20.0);
    s.press({0, 0});
    const MoveReport r = s.move({200, 0});
    // Oracle: right side at x = 10 meets the wall face at x = 90.
    EXPECT_NEAR(r.applied_delta.x, 80.0, 1e-6);
    EXPECT_LE(r.applied_delta.x, 80.0);
    EXPECT_NEAR(r.corrected_cursor->x, 80.0, 1e-6);
    // Pushing diagonally into the wall slides along it.
    const MoveReport d = s.move({r.corrected_cursor->x + 30, 40});
    EXPECT_NEAR(d.applied_delta.x, 0.0, 1e-6);
    EXPECT_NEAR(d.applied_delta.y, 40.0, 1e-6);
    EXPECT_FALSE(interior_overlap(s.get("wall").footprint(), s.get("box").footprint()));
}

TEST(Overlap, SameColorOnly) {
    Scene s;
    s.settings().overlap.mode = OverlapRule::Mode::SameColorForbidden;
    s.add<Rect>("red1", Point{100, 0}, 20.0, 20.0).set_color_class("red");
    s.add<Rect>("blue", Point{50, 0}, 20.0, 20.0).set_color_class("blue");
    s.add<Rect>("red2", Point{0, 0}, 20.0, 20.0).set_color_class("red");
    s.press({0, 0});
    // Passes over blue, stops against red1.
    const MoveReport r = s.move({200, 0});
    EXPECT_NEAR(r.applied_delta.x, 80.0, 1e-6);
}

TEST(Overlap, ObstacleBlocksEveryColor) {
    Scene s;
    s.settings().overlap = {OverlapRule::Mode::SameColorForbidden, {"rock"}};
    s.add<Circle>("rock", Point{100, 0}, 10.0);
    s.add<Rect>("box", Point{0, 0}, 20.0, 20.0).set_color_class("blue");
    s.press({0, 0});
    EXPECT_NEAR(s.move({200, 0}).applied_delta.x, 80.0, 1e-6);
}

TEST(Overlap, ExistingOverlapDoesNotLock) {
    Scene s;
    s.settings().overlap.mode = OverlapRule::Mode::AllForbidden;
    s.add<Rect>("a", Point{0, 0}, 20.0, 20.0);
    s.add<Rect>("b", Point{5, 0}, 20.0, 20.0);
    s.press({5, 0});
    EXPECT_EQ(s.move({105, 0}).applied_delta, (Vector{100, 0}));
}

TEST(Comments, FollowTheirBody) {
    Scene s;
    s.add<Rect>("body", Point{0, 0}, 40.0, 20.0);
    s.add<Text>("note", "hi", Point{0, -30}, 12.0, false);
    s.add_comment({"body", "note", CommentRegion::box(30.0)});
    s.press({0, 0});
    s.move({50, 10});
    s.release({50, 10});
    EXPECT_EQ(static_cast<const Text&>(s.get("note")).center(), (Point{50, -20}));
    // The comment alone stays inside its region: body box bottom 0 minus 30.
    s.press({50, -20});
    const MoveReport r = s.move({50, -200});
    EXPECT_EQ(r.applied_delta, (Vector{0, -10}));
    EXPECT_EQ(static_cast<const Text&>(s.get("note")).center(), (Point{50, -30}));
    EXPECT_TRUE(s.validate().empty());
}

TEST(Comments, ReclampedWhenTheBodyShrinks) {
    Scene s;
    s.add<Rect>("body", Point{0, 0}, 100.0, 20.0);
    s.add<Text>("note", "hi", Point{80, 0}, 12.0, false);
    s.add_comment({"body", "note", CommentRegion::box(30.0)});
    // Right edge dragged to x = -20: the region now ends at -20 + 30.
    s.press({50, 0});
    s.move({-20, 0});
    EXPECT_TRUE(s.validate().empty());
    EXPECT_EQ(static_cast<const Text&>(s.get("note")).center().x, 10.0);
}

TEST(Groups, FrameDragMovesMembers) {
    Scene s;
    s.add<Circle>("a", Point{0, 0}, 10.0);
    s.add<Rect>("b", Point{50, 0}, 20.0, 20.0);
    s.add<ElasticGroup>("g", std::vector<std::string>{"a", "b"}, Margins{5, 5, 5, 5}, "g");
    const Box f = static_cast<const ElasticGroup&>(s.get("g")).frame();
    EXPECT_EQ(f, (Box{-15, -15, 65, 15}));
    const CatchResult c = s.press({-15, 0});
    EXPECT_EQ(*c.object_id, "g");
    s.move({-5, 10});
    EXPECT_EQ(static_cast<const Circle&>(s.get("a")).center(), (Point{10, 10}));
    EXPECT_EQ(static_cast<const Rect&>(s.get("b")).center(), (Point{60, 10}));
    EXPECT_EQ(static_cast<const ElasticGroup&>(s.get("g")).frame(), (Box{-5, -5, 75, 25}));
}

TEST(Groups, MemberDragStretchesTheFrame) {
    Scene s;
    s.add<Circle>("a", Point{0, 0}, 10.0);
    s.add<Rect>("b", Point{50, 0}, 20.0, 20.0);
    s.add<ElasticGroup>("g", std::vector<std::string>{"a", "b"}, Margins{5, 5, 5, 5}, "g");
    s.settings().raise_on_catch = false;
    EXPECT_EQ(*s.press({50, 0}).object_id, "b");
    s.move({80, 30});
    EXPECT_EQ(static_cast<const ElasticGroup&>(s.get("g")).frame(), (Box{-15, -15, 95, 45}));
    EXPECT_TRUE(s.validate().empty());
}

TEST(StateMachine, RandomStreamsKeepTheProtocol) {
    Rng rng(17);
    Scene s;
    s.add<Rect>("r", Point{0, 0}, 40.0, 30.0);
    s.add<Circle>("c", Point{60, 0}, 20.0);
    bool caught = false;
    for (int i = 0; i < 5000; ++i) {
        const Point p = rng.point(-50, 100);
        switch (rng.index(3)) {
            case 0:
                if (caught) {
                    EXPECT_THROW(s.press(p), Error);
                } else {
                    caught = s.press(p, rng.chance(0.3) ? PointerButton::Secondary : PointerButton::Primary).caught;
                }
                break;
            case 1: {
                const MoveReport r = s.move(p);
                if (!caught) {
                    EXPECT_FALSE(r.moved);
                }
                if (!r.moved) {
                    EXPECT_EQ(r.applied_delta, (Vector{0, 0}));
                }
                break;
            }
            default:
                EXPECT_EQ(s.release(p).has_value(), caught);
                caught = false;
        }
        EXPECT_EQ(s.mover().is_caught(), caught);
    }
}
