#include "movable/demo.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "movable/shapes.hpp"

namespace movable {

Scene demo_scene() {
    Scene s;
    s.settings().area = AreaRestriction{{0.0, 0.0, 1200.0, 800.0}, AreaRestriction::Mode::GrabPointInside};

    s.add<Text>("heading", "Movable objects", Point{600.0, 770.0}, 20.0, false);

    s.add<SolitaryLine>("line", Point{60.0, 640.0}, Point{220.0, 720.0});
    s.add<SegmentedLine>("polyline", std::vector<Point>{{260, 650}, {320, 720}, {380, 660}, {440, 730}});

    auto& free_rect = s.add<Rect>("rect", Point{150.0, 520.0}, 160.0, 90.0);
    free_rect.set_partitions({50.0, 110.0});
    free_rect.set_color_class("blue");

    RectPolicy ratio;
    ratio.mode = RectPolicy::Mode::FixedRatio;
    ratio.ratio = 2.0;
    s.add<Rect>("rect_ratio", Point{360.0, 520.0}, 120.0, 60.0, ratio);

    RectPolicy sym;
    sym.mode = RectPolicy::Mode::Symmetric;
    auto& sym_rect = s.add<Rect>("rect_sym", Point{540.0, 520.0}, 100.0, 70.0, sym);
    sym_rect.set_angle(0.3);

    RectPolicy single;
    single.mode = RectPolicy::Mode::SingleBorder;
    single.side = RectSide::Top;
    s.add<Rect>("rect_single", Point{700.0, 520.0}, 90.0, 60.0, single);

    RectPolicy vanish;
    vanish.vanish = RectPolicy::Vanish::Vanish;
    s.add<Rect>("rect_vanish", Point{850.0, 520.0}, 80.0, 50.0, vanish);

    auto& circle = s.add<Circle>("circle", Point{120.0, 330.0}, 55.0);
    circle.set_color_class("red");
    s.add<Ring>("ring", Point{290.0, 330.0}, 30.0, 65.0, std::vector<double>{0.0, 2.0, 4.0});
    s.add<RegularPolygon>("hexagon", Point{460.0, 330.0}, 55.0, 6);
    s.add<ConvexPolygon>("convex", std::vector<Point>{{560, 290}, {660, 280}, {690, 360}, {610, 390}, {550, 350}});
    s.add<ChatoyantPolygon>("chatoyant", Point{790.0, 330.0},
                            std::vector<Point>{{740, 290}, {800, 270}, {850, 320}, {830, 380}, {760, 370}});
    s.add<Sector>("sector", Point{960.0, 300.0}, 70.0, 0.3, 2.0, SectorPolicy::OneSide);
    s.add<Crescent>("crescent", Point{1100.0, 330.0}, 50.0, Vector{25.0, 10.0}, 40.0);

    s.add<SimpleHouse>("house", Box{80.0, 80.0, 200.0, 160.0}, Point{140.0, 220.0});
    s.add<Text>("house_note", "home", Point{140.0, 50.0}, 14.0, false);
    s.add_comment({"house", "house_note", CommentRegion::box(40.0)});

    auto& label = s.add<Text>("label", "turn me", Point{330.0, 120.0}, 16.0, true);
    label.set_angle(0.4);
    s.add<Text>("circle_note", "radius 55", Point{120.0, 250.0}, 12.0, false);
    s.add_comment({"circle", "circle_note", CommentRegion::radius(90.0)});

    auto& g_circle = s.add<Circle>("g_circle", Point{620.0, 110.0}, 30.0);
    g_circle.set_color_class("red");
    s.add<Rect>("g_rect", Point{720.0, 120.0}, 80.0, 50.0);
    s.add<Text>("g_note", "pair", Point{720.0, 60.0}, 12.0, false);
    s.add_comment({"g_rect", "g_note", CommentRegion::free()});
    s.add<ElasticGroup>("group", std::vector<std::string>{"g_circle", "g_rect"}, Margins{10.0, 10.0, 10.0, 10.0},
                        "group", 0.3);
    return s;
}

int Labyrinth::cell_of(Point p) const {
    const int col = static_cast<int>(std::floor(p.x / cell));
    const int row = static_cast<int>(std::floor(p.y / cell));
    if (col < 0 || row < 0 || col >= cols || row >= rows) return -1;
    return row * cols + col;
}

Labyrinth labyrinth(double ball_radius, double opening) {
    Labyrinth lab;
    lab.opening = opening;
    const int n = lab.cols * lab.rows;

    // Spanning tree by randomized depth-first search with a fixed seed.
    std::mt19937 engine(7);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    visited[0] = true;
    while (!stack.empty()) {
        const int cur = stack.back();
        const int r = cur / lab.cols;
        const int c = cur % lab.cols;
        std::vector<int> next;
        if (c > 0) next.push_back(cur - 1);
        if (c + 1 < lab.cols) next.push_back(cur + 1);
        if (r > 0) next.push_back(cur - lab.cols);
        if (r + 1 < lab.rows) next.push_back(cur + lab.cols);
        std::erase_if(next, [&](int k) { return visited[static_cast<std::size_t>(k)]; });
        if (next.empty()) {
            stack.pop_back();
            continue;
        }
        const int k = next[engine() % next.size()];
        visited[static_cast<std::size_t>(k)] = true;
        lab.openings.emplace_back(std::min(cur, k), std::max(cur, k));
        stack.push_back(k);
    }
    auto is_open = [&](int a, int b) {
        for (const auto& [x, y] : lab.openings) {
            if (x == std::min(a, b) && y == std::max(a, b)) return true;
        }
        return false;
    };

    Scene& s = lab.scene;
    s.settings().raise_on_catch = false;
    s.settings().overlap.mode = OverlapRule::Mode::AllForbidden;
    const double w = lab.wall;
    const double h = w / 2.0;
    int count = 0;
    auto wall = [&](Point a, Point b) {
        // Axis-aligned piece from a to b, thickened by the wall width.
        const Box box{std::min(a.x, b.x) - h, std::min(a.y, b.y) - h, std::max(a.x, b.x) + h, std::max(a.y, b.y) + h};
        auto& r = s.add<Rect>("wall" + std::to_string(count++), box.center(), box.width(), box.height());
        r.set_movable(false);
    };
    // Wall on the grid line from a to b, with a centered gap when open.
    auto grid_wall = [&](Point a, Point b, bool open) {
        if (!open) {
            wall(a, b);
            return;
        }
        const Point mid = (a + b) / 2.0;
        const Vector u = (b - a) / distance(a, b);
        const double half_gap = opening / 2.0;
        // wall() thickens both ends by h, so the gap comes out exactly opening wide.
        const Point p1 = mid - u * (half_gap + h);
        const Point p2 = mid + u * (half_gap + h);
        wall(a, p1);
        wall(p2, b);
    };
    const double cs = lab.cell;
    for (int r = 0; r <= lab.rows; ++r) {
        for (int c = 0; c < lab.cols; ++c) {
            const bool inner = r > 0 && r < lab.rows;
            grid_wall({c * cs, r * cs}, {(c + 1) * cs, r * cs},
                      inner && is_open((r - 1) * lab.cols + c, r * lab.cols + c));
        }
    }
    for (int c = 0; c <= lab.cols; ++c) {
        for (int r = 0; r < lab.rows; ++r) {
            const bool inner = c > 0 && c < lab.cols;
            grid_wall({c * cs, r * cs}, {c * cs, (r + 1) * cs}, inner && is_open(r * lab.cols + c - 1, r * lab.cols + c));
        }
    }

    auto& ball = s.add<Circle>(lab.ball_id, Point{cs / 2.0, cs / 2.0}, ball_radius);
    SizeLimits fixed;
    fixed.min_radius = ball_radius;
    fixed.max_radius = ball_radius;
    ball.set_limits(fixed);
    return lab;
}

}  // namespace movable
