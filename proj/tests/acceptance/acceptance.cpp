// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../corruptions.hpp"
#include "../support.hpp"
#include "movable/demo.hpp"
#include "movable/error.hpp"
#include "movable/fuzz.hpp"
#include "movable/groups.hpp"
#include "movable/layout.hpp"
#include "movable/shapes.hpp"
#include "movable/svg.hpp"
#include "movable/trace.hpp"

using namespace movable;
using movable::testing::Rng;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string data_file(const std::string& name) { return read_file(std::string(MOVABLE_TEST_DATA) + "/" + name); }

NodeBehavior behavior_at(const MovableObject& obj, std::size_t node) { return obj.build_cover().nodes[node].behavior; }

/// A point of @p obj whose first cover hit has behavior @p want.
std::optional<Point> point_with_behavior(Rng& rng, const MovableObject& obj, NodeBehavior want) {
    const Cover cover = obj.build_cover();
    const Box b = obj.bounds().inflated(kBandHalfwidth);
    for (int tries = 0; tries < 2000; ++tries) {
        const Point p = rng.in_box(b);
        const auto h = hit(cover, p);
        if (h && h->behavior == want) return p;
    }
    return std::nullopt;
}

/// Uniform interior sample by rejection from the bounds.
std::optional<Point> interior_point(Rng& rng, const MovableObject& obj) {
    const Box b = obj.bounds().inflated(1.0);
    for (int tries = 0; tries < 100000; ++tries) {
        const Point p = rng.in_box(b);
        if (obj.interior_contains(p)) return p;
    }
    return std::nullopt;
}

// Containment written out per shape, independent of the cover module.
bool oracle_contains(const NodeShape& shape, Point p) {
    if (const auto* c = std::get_if<CircleShape>(&shape)) {
        return std::hypot(p.x - c->center.x, p.y - c->center.y) <= c->radius;
    }
    if (const auto* poly = std::get_if<PolygonShape>(&shape)) {
        const auto& v = poly->vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point a = v[i];
            const Point b = v[(i + 1) % v.size()];
            if ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) < 0.0) return false;
        }
        return true;
    }
    const auto& s = std::get<StripShape>(shape);
    const double dx = s.b.x - s.a.x;
    const double dy = s.b.y - s.a.y;
    const double t = std::clamp(((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / (dx * dx + dy * dy), 0.0, 1.0);
    return std::hypot(p.x - (s.a.x + t * dx), p.y - (s.a.y + t * dy)) <= s.halfwidth;
}

// 1 -----------------------------------------------------------------------------

Verdict translation_fidelity() {
    Rng rng(1001);
    double worst = 0.0;
    std::size_t failures = 0;
    std::size_t cases = 0;
    std::size_t redrawn = 0;
    for (ObjectKind kind : movable::testing::shape_kinds()) {
        for (int i = 0; i < 1000; ++i) {
            Scene s;
            const auto& obj = s.add_object(movable::testing::random_shape(rng, kind, "x", rng.point(-200, 200)));
            const auto grab = point_with_behavior(rng, obj, NodeBehavior::WholeMove);
            if (!grab) {
                // Tiny polygon: every point belongs to a vertex, edge or center handle.
                ++redrawn;
                --i;
                continue;
            }
            const auto before = obj.defining_points();
            const Vector delta = rng.point(-300, 300);
            const auto caught = s.press(*grab);
            if (!caught.caught || caught.object_id != "x") {
                ++failures;
                continue;
            }
            s.move(*grab + delta);
            const auto info = s.release(*grab + delta);
            const auto after = s.get("x").defining_points();
            double err = std::max(std::abs(info->total_displacement.x - delta.x),
                                  std::abs(info->total_displacement.y - delta.y));
            for (std::size_t k = 0; k < before.size(); ++k) {
                err = std::max({err, std::abs(after[k].x - (before[k].x + delta.x)),
                                std::abs(after[k].y - (before[k].y + delta.y))});
            }
            worst = std::max(worst, err);
            if (!(err <= 1e-12)) ++failures;
            ++cases;
        }
    }
    return {failures == 0, fmt("%zu cases over %zu families, %zu failures, max error %.3g (%zu instances with no "
                               "exposed body redrawn)",
                               cases, movable::testing::shape_kinds().size(), failures, worst, redrawn)};
}

// 2 -----------------------------------------------------------------------------

Verdict inner_point_movability() {
    Rng rng(1002);
    std::size_t dead = 0;
    std::size_t total = 0;
    std::string first;
    for (ObjectKind kind : movable::testing::shape_kinds()) {
        for (int inst = 0; inst < 10; ++inst) {
            Scene s;
            s.add_object(movable::testing::random_shape(rng, kind, "x", rng.point(-200, 200)));
            for (int i = 0; i < 200; ++i) {
                const auto p = interior_point(rng, s.get("x"));
                ++total;
                bool ok = false;
                if (p) {
                    const auto c = s.press(*p);
                    if (c.caught && c.object_id == "x") {
                        const NodeBehavior b = behavior_at(s.get("x"), *c.node_index);
                        ok = b == NodeBehavior::WholeMove || b == NodeBehavior::NodeMove;
                    }
                    s.release(*p);
                }
                if (!ok) {
                    ++dead;
                    if (first.empty()) first = " first: " + std::string(kind_name(kind));
                }
            }
        }
    }
    return {dead == 0, fmt("%zu interior points (200 x 10 instances x %zu shapes), %zu dead%s", total,
                           movable::testing::shape_kinds().size(), dead, first.c_str())};
}

// 3 -----------------------------------------------------------------------------

Verdict rotation_rigidity() {
    Rng rng(1003);
    std::vector<ObjectKind> kinds;
    for (ObjectKind k : movable::testing::shape_kinds()) {
        Rng probe(1);
        if (movable::testing::random_shape(probe, k, "p", {0, 0})->rotatable()) kinds.push_back(k);
    }
    double drift = 0.0;
    std::size_t arcs = 0;
    std::size_t turned = 0;
    while (arcs < 1000) {
        Scene s;
        const ObjectKind kind = kinds[rng.index(kinds.size())];
        const auto& obj = s.add_object(movable::testing::random_shape(rng, kind, "x", rng.point(-200, 200)));
        const auto grab = interior_point(rng, obj);
        const Point pivot = obj.rotation_center();
        if (!grab || distance(*grab, pivot) < 1.0) continue;
        const auto before = movable::testing::pairwise_distances(obj);
        const auto c = s.press(*grab, PointerButton::Secondary);
        if (!c.caught) continue;
        const double r = distance(*grab, pivot);
        double a = polar_angle(*grab, pivot);
        const int steps = 1 + static_cast<int>(rng.index(10));
        for (int k = 0; k < steps; ++k) {
            a += rng.uniform(-0.8, 0.8);
            s.move(pivot + unit_at(a) * (r * rng.uniform(0.5, 1.5)));
        }
        const auto info = s.release(pivot);
        if (info && info->total_rotation != 0.0) ++turned;
        const auto after = movable::testing::pairwise_distances(s.get("x"));
        for (std::size_t k = 0; k < before.size(); ++k) drift = std::max(drift, std::abs(after[k] - before[k]));
        ++arcs;
    }

    std::size_t rejected = 0;
    const int attempts = 100;
    for (int i = 0; i < attempts; ++i) {
        Scene s;
        const auto& t = s.add_object(movable::testing::random_shape(rng, ObjectKind::TextM, "t", rng.point(-200, 200)));
        const auto before = t.defining_points();
        const Point p = *interior_point(rng, t);
        bool refused = false;
        try {
            rotate_object(s.get("t"), p, Angle(rng.uniform(0.1, 3.0)));
        } catch (const Error& e) {
            refused = e.code() == ErrorCode::NotRotatable;
        }
        s.press(p, PointerButton::Secondary);
        for (int k = 0; k < 5; ++k) s.move(p + rng.point(-50, 50));
        const auto info = s.release(p);
        const bool unchanged = s.get("t").defining_points() == before && (!info || info->total_rotation == 0.0);
        if (refused && unchanged) ++rejected;
    }
    const bool pass = drift <= 1e-9 && rejected == static_cast<std::size_t>(attempts) && turned > arcs / 2;
    return {pass, fmt("%zu arcs (%zu turned), max distance drift %.3g; TextM refused %zu/%d", arcs, turned, drift,
                      rejected, attempts)};
}

// 4 -----------------------------------------------------------------------------

Verdict policy_invariants() {
    Rng rng(1004);
    constexpr int kDrags = 10000;
    RectPolicy ratio;
    ratio.mode = RectPolicy::Mode::FixedRatio;
    ratio.ratio = 1.5;
    Rect fixed("f", {0, 0}, 150, 100, ratio);
    fixed.set_angle(0.7);
    double ratio_drift = 0.0;
    RectPolicy sym;
    sym.mode = RectPolicy::Mode::Symmetric;
    const Point center{12.5, -7.25};
    Rect symmetric("s", center, 100, 40, sym);
    symmetric.set_angle(-1.1);
    double center_drift = 0.0;
    for (int i = 0; i < kDrags; ++i) {
        const std::size_t corner = rng.index(4);
        resize_rect(fixed, {HandleKind::Corner, corner}, fixed.center() + rng.point(-300, 300));
        ratio_drift = std::max(ratio_drift, std::abs(fixed.width() / fixed.height() - 1.5));
        const Handle h = rng.chance(0.5) ? Handle{HandleKind::Corner, corner} : Handle{HandleKind::Edge, corner};
        resize_rect(symmetric, h, symmetric.center() + rng.point(-300, 300));
        center_drift = std::max({center_drift, std::abs(symmetric.center().x - center.x),
                                 std::abs(symmetric.center().y - center.y)});
    }

    std::size_t ring_bad = 0;
    Ring ring("r", {0, 0}, 30, 60, {-2.0, 0.0, 2.0});
    const HandleKind ring_parts[] = {HandleKind::InnerBand, HandleKind::OuterBand, HandleKind::Partition};
    for (int i = 0; i < kDrags; ++i) {
        const HandleKind part = ring_parts[rng.index(3)];
        const std::size_t index = part == HandleKind::Partition ? rng.index(3) : 0;
        const Point from = rng.point(-150, 150);
        ring.move_node({part, index}, from, rng.point(-150, 150));
        bool ok = ring.r_inner() > 0.0 && ring.r_inner() + kMinGap <= ring.r_outer() + 1e-9;
        const auto& parts = ring.partitions();
        for (std::size_t k = 1; k < parts.size(); ++k) ok = ok && parts[k] > parts[k - 1];
        ok = ok && parts.back() - parts.front() < 2 * kPi;
        if (!ok) ++ring_bad;
    }

    std::size_t sector_bad = 0;
    Sector sector("s", {0, 0}, 60, 0.5, 2.0, SectorPolicy::Full);
    const HandleKind sector_parts[] = {HandleKind::Arc, HandleKind::SideStart, HandleKind::SideEnd};
    for (int i = 0; i < kDrags; ++i) {
        const HandleKind part = sector_parts[rng.index(3)];
        const Point from = rng.point(-150, 150);
        sector.move_node({part, 0}, from, rng.point(-150, 150));
        const bool ok = sector.sweep() >= kMinSweep && sector.sweep() <= 2 * kPi - kMinSweep && sector.radius() > 0.0;
        if (!ok) ++sector_bad;
    }
    const bool pass = ratio_drift <= 1e-9 && center_drift == 0.0 && ring_bad == 0 && sector_bad == 0;
    return {pass, fmt("%d drags each: ratio drift %.3g, symmetric center drift %.3g, ring violations %zu, "
                      "sector violations %zu",
                      kDrags, ratio_drift, center_drift, ring_bad, sector_bad)};
}

// 5 -----------------------------------------------------------------------------

Verdict transparent_pass_through() {
    Rng rng(1005);
    const ObjectKind holed[] = {ObjectKind::Ring, ObjectKind::Crescent};
    std::size_t presses = 0;
    std::size_t mismatches = 0;
    std::size_t fell_through = 0;
    for (int stack = 0; stack < 500; ++stack) {
        Scene base;
        const Point c = rng.point(-50, 50);
        const std::size_t n = 2 + rng.index(5);
        for (std::size_t i = 0; i < n; ++i) {
            const ObjectKind kind = rng.chance(0.5) ? holed[rng.index(2)]
                                                    : movable::testing::shape_kinds()[rng.index(13)];
            base.add_object(movable::testing::random_shape(rng, kind, "o" + std::to_string(i), c + rng.point(-25, 25)));
        }
        for (int k = 0; k < 20; ++k) {
            const Point p = c + rng.point(-70, 70);
            // Oracle: drop objects whose first hit is transparent, take the top hit.
            std::optional<std::string> expected;
            bool passed_a_hole = false;
            const auto& objs = base.objects();
            for (auto it = objs.rbegin(); it != objs.rend() && !expected; ++it) {
                for (const auto& node : (*it)->build_cover().nodes) {
                    if (!oracle_contains(node.shape, p)) continue;
                    if (node.behavior == NodeBehavior::Transparent) {
                        passed_a_hole = true;
                    } else {
                        expected = (*it)->id();
                    }
                    break;
                }
            }
            Scene s = base;
            const auto got = s.press(p);
            ++presses;
            if (passed_a_hole) ++fell_through;
            if (got.object_id != expected) ++mismatches;
        }
    }
    return {mismatches == 0, fmt("500 stacks, %zu presses (%zu through a transparent node), %zu mismatches", presses,
                                 fell_through, mismatches)};
}

// 6 -----------------------------------------------------------------------------

/// Overlap of two interiors deeper than @p depth, found on a sample grid.
bool sampled_overlap(const MovableObject& a, const MovableObject& b, double step, double depth) {
    const Box ab = a.bounds();
    const Box bb = b.bounds();
    const Box i{std::max(ab.min_x, bb.min_x), std::max(ab.min_y, bb.min_y), std::min(ab.max_x, bb.max_x),
                std::min(ab.max_y, bb.max_y)};
    if (i.min_x > i.max_x || i.min_y > i.max_y) return false;
    const Vector offsets[] = {{0, 0}, {depth, 0}, {-depth, 0}, {0, depth}, {0, -depth}};
    for (double x = i.min_x; x <= i.max_x; x += step) {
        for (double y = i.min_y; y <= i.max_y; y += step) {
            bool inside = true;
            for (const Vector& o : offsets) {
                const Point p{x + o.x, y + o.y};
                if (!a.interior_contains(p) || !b.interior_contains(p)) {
                    inside = false;
                    break;
                }
            }
            if (inside) return true;
        }
    }
    return false;
}

struct RestrictionTally {
    std::size_t events = 0;
    std::size_t blocked = 0;
    std::size_t overlaps = 0;
    std::size_t outside = 0;
    std::size_t violations = 0;
};

/// Fuzzes @p base with three seeds and steps each trace, checking every
/// same-class pair by interior sampling and the grab point against the area.
void check_restrictions(const Scene& base, RestrictionTally& t) {
    const Box area = base.settings().area->bounds;
    auto same_class_pairs = [](const Scene& s) {
        std::vector<std::pair<const MovableObject*, const MovableObject*>> pairs;
        const auto& objs = s.objects();
        for (std::size_t i = 0; i < objs.size(); ++i) {
            for (std::size_t j = i + 1; j < objs.size(); ++j) {
                const auto& a = *objs[i];
                const auto& b = *objs[j];
                if (a.kind() == ObjectKind::ElasticGroup || b.kind() == ObjectKind::ElasticGroup) continue;
                if (a.color_class() && b.color_class() && *a.color_class() == *b.color_class()) pairs.emplace_back(&a, &b);
            }
        }
        return pairs;
    };
    auto key = [](const MovableObject* a, const MovableObject* b) {
        return std::min(a->id(), b->id()) + "|" + std::max(a->id(), b->id());
    };
    // Pairs overlapping from the start are exempt; a fine grid catches
    // shallow contacts such as crossing line ends.
    std::set<std::string> grandfathered;
    for (const auto& [a, b] : same_class_pairs(base)) {
        if (sampled_overlap(*a, *b, 0.25, 0.0)) grandfathered.insert(key(a, b));
    }
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        FuzzOptions opt;
        opt.events = 1000;
        opt.seed = seed;
        const FuzzResult r = run_fuzz(base, opt);
        t.violations += r.violations.size();
        Scene s = base;
        for (const auto& e : r.trace) {
            ++t.events;
            if (e.kind == TraceKind::Press) s.press(e.pos, *e.button);
            if (e.kind == TraceKind::Move && s.move(e.pos).corrected_cursor) ++t.blocked;
            if (e.kind == TraceKind::Release) s.release(e.pos);
            if (const auto g = s.mover().grab_point()) {
                if (g->x < area.min_x || g->x > area.max_x || g->y < area.min_y || g->y > area.max_y) ++t.outside;
            }
            if (e.kind != TraceKind::Move) continue;
            for (const auto& [a, b] : same_class_pairs(s)) {
                if (grandfathered.count(key(a, b))) continue;
                if (sampled_overlap(*a, *b, 1.0, 1e-3)) ++t.overlaps;
            }
        }
    }
}

Verdict restrictions() {
    RestrictionTally t;

    Scene demo = demo_scene();
    demo.settings().overlap.mode = OverlapRule::Mode::SameColorForbidden;
    const char* colors[] = {"red", "blue", "green"};
    std::size_t n = 0;
    for (const auto& id : demo.display_order()) {
        MovableObject& obj = demo.get(id);
        if (obj.kind() != ObjectKind::ElasticGroup) obj.set_color_class(colors[n++ % 3]);
    }
    check_restrictions(demo, t);

    // Crowded: 40 shapes of two classes on a small area.
    Rng rng(1006);
    Scene crowded;
    crowded.settings().overlap.mode = OverlapRule::Mode::SameColorForbidden;
    crowded.settings().area = AreaRestriction{{0, 0, 400, 300}, AreaRestriction::Mode::GrabPointInside};
    for (int i = 0; i < 40; ++i) {
        const ObjectKind kind = movable::testing::shape_kinds()[rng.index(13)];
        auto obj = movable::testing::random_shape(rng, kind, "o" + std::to_string(i), rng.point(40, 260) + Vector{50, 0});
        obj->set_color_class(i % 2 == 0 ? "red" : "blue");
        crowded.add_object(std::move(obj));
    }
    check_restrictions(crowded, t);

    const bool pass = t.overlaps == 0 && t.outside == 0 && t.violations == 0;
    return {pass, fmt("%zu events over 6 traces in 2 scenes, %zu corrected moves: %zu same-class overlaps, grab "
                      "point outside %zu times, %zu fuzz violations",
                      t.events, t.blocked, t.overlaps, t.outside, t.violations)};
}

// 7 -----------------------------------------------------------------------------

Verdict labyrinth_containment() {
    const Labyrinth lab = labyrinth();
    const double radius = static_cast<const Circle&>(lab.scene.get(lab.ball_id)).radius();
    // Corridor graph: openings wide enough for the ball.
    const int cells = lab.cols * lab.rows;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(cells));
    for (const auto& [a, b] : lab.openings) {
        if (lab.opening >= 2 * radius) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
    }
    const int start = lab.cell_of(static_cast<const Circle&>(lab.scene.get(lab.ball_id)).center());
    std::set<int> reachable{start};
    std::vector<int> queue{start};
    while (!queue.empty()) {
        const int u = queue.back();
        queue.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (reachable.insert(v).second) queue.push_back(v);
        }
    }

    FuzzOptions opt;
    opt.events = 10000;
    opt.seed = 7;
    opt.focus = lab.ball_id;
    const FuzzResult r = run_fuzz(lab.scene, opt);
    Scene s = lab.scene;
    std::size_t escapes = 0;
    double travelled = 0.0;
    Point last = static_cast<const Circle&>(s.get(lab.ball_id)).center();
    for (const auto& e : r.trace) {
        if (e.kind == TraceKind::Press) s.press(e.pos, *e.button);
        if (e.kind == TraceKind::Move) s.move(e.pos);
        if (e.kind == TraceKind::Release) s.release(e.pos);
        const Point c = static_cast<const Circle&>(s.get(lab.ball_id)).center();
        travelled += distance(c, last);
        last = c;
        if (!reachable.count(lab.cell_of(c))) ++escapes;
    }
    const bool pass = escapes == 0 && r.violations.empty() && r.trace.size() == opt.events;
    return {pass, fmt("%zu events, ball radius %g, openings %g, %zu reachable cell(s), ball travelled %.0f, "
                      "%zu escapes, %zu fuzz violations",
                      r.trace.size(), radius, lab.opening, reachable.size(), travelled, escapes,
                      r.violations.size())};
}

// 8 -----------------------------------------------------------------------------

Verdict determinism() {
    const Scene demo = deserialize(data_file("demo.layout"));
    const auto trace = parse_trace(data_file("determinism.trace"));
    const std::string golden = data_file("determinism.layout");
    const std::string first = serialize(replay(demo, trace).final_scene);
    const std::string second = serialize(replay(demo, trace).final_scene);
    std::size_t mismatches = (first != second) + (first != golden);
    for (std::uint64_t seed = 100; seed < 105; ++seed) {
        FuzzOptions opt;
        opt.events = 1000;
        opt.seed = seed;
        Scene restricted = demo;
        restricted.settings().overlap.mode = OverlapRule::Mode::AllForbidden;
        const FuzzResult r = run_fuzz(restricted, opt);
        const std::string a = serialize(replay(restricted, r.trace).final_scene);
        const std::string b = serialize(replay(restricted, parse_trace(format_trace(r.trace))).final_scene);
        mismatches += (a != b) + (a != serialize(r.final_scene));
    }
    return {mismatches == 0, fmt("golden trace of %zu events replayed twice, %s the stored layout; 5 seeded traces "
                                 "replayed twice; %zu mismatches",
                                 trace.size(), first == golden ? "matching" : "NOT matching", mismatches)};
}

// 9 -----------------------------------------------------------------------------

Verdict serialization() {
    const std::string golden = data_file("demo.layout");
    const bool demo_matches = serialize(demo_scene()) == golden;
    const bool round_trip = serialize(deserialize(golden)) == golden;
    const bool valid = deserialize(golden).validate().empty();
    const auto cases = movable::testing::corruptions(golden);
    std::size_t rejected = 0;
    std::string accepted;
    for (const auto& c : cases) {
        bool rejects = false;
        try {
            rejects = !deserialize(c.text).validate().empty();
        } catch (const Error&) {
            rejects = true;
        }
        if (rejects) {
            ++rejected;
        } else {
            accepted += " " + c.name;
        }
    }
    const bool pass = demo_matches && round_trip && valid && cases.size() >= 20 && rejected == cases.size();
    return {pass, fmt("demo %s golden, round trip %s, %zu/%zu corruptions rejected%s",
                      demo_matches ? "matches" : "differs from", round_trip ? "byte-identical" : "differs", rejected,
                      cases.size(), accepted.empty() ? "" : ("; accepted:" + accepted).c_str())};
}

// 10 ----------------------------------------------------------------------------

Verdict cover_visualization() {
    Rng rng(1010);
    std::size_t exact = 0;
    std::size_t nodes_total = 0;
    for (int scene = 0; scene < 50; ++scene) {
        Scene s;
        const std::size_t n = 3 + rng.index(12);
        for (std::size_t i = 0; i < n; ++i) {
            const ObjectKind kind = movable::testing::shape_kinds()[rng.index(13)];
            auto obj = movable::testing::random_shape(rng, kind, "o" + std::to_string(i), rng.point(0, 600));
            if (rng.chance(0.1)) obj->set_movable(false);
            s.add_object(std::move(obj));
        }
        if (rng.chance(0.5)) {
            s.add<ElasticGroup>("g", std::vector<std::string>{"o0", "o1"}, Margins{5, 5, 5, 5}, "g", 0.2);
        }
        if (rng.chance(0.5)) {
            const Point at = s.get("o2").bounds().center() + Vector{0, 10};
            s.add<Text>("note", "note", at, 12, false);
            s.add_comment({"o2", "note", {CommentRegion::Kind::Free, 50}});
        }
        std::size_t nodes = 0;
        for (const auto& obj : s.objects()) nodes += obj->build_cover().nodes.size();
        const std::string svg = render_svg(s, true);
        std::size_t drawn = 0;
        for (auto pos = svg.find("class=\"cover\""); pos != std::string::npos; pos = svg.find("class=\"cover\"", pos + 1)) {
            ++drawn;
        }
        const bool hidden = render_svg(s, false).find("class=\"cover\"") == std::string::npos;
        if (drawn == nodes && hidden) ++exact;
        nodes_total += nodes;
    }
    return {exact == 50, fmt("%zu/50 scenes exact, %zu nodes in total", exact, nodes_total)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"translation fidelity", translation_fidelity},
        {"any-inner-point movability", inner_point_movability},
        {"rotation rigidity", rotation_rigidity},
        {"policy invariants", policy_invariants},
        {"transparent pass-through", transparent_pass_through},
        {"restrictions", restrictions},
        {"labyrinth", labyrinth_containment},
        {"determinism", determinism},
        {"serialization", serialization},
        {"cover visualization", cover_visualization},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str(), secs);
        std::fflush(stdout);
        if (!v.pass) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
