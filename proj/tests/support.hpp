#pragma once
// Shared helpers for the unit and acceptance tests.

#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "movable/groups.hpp"
#include "movable/scene.hpp"
#include "movable/shapes.hpp"

namespace movable::testing {


class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
    }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0.0, static_cast<double>(n))); }
    Point point(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }
    Point in_box(const Box& b) { return {uniform(b.min_x, b.max_x), uniform(b.min_y, b.max_y)}; }
    bool chance(double p) { return uniform(0.0, 1.0) < p; }

private:
    std::mt19937_64 engine_;
};

inline const std::vector<ObjectKind>& shape_kinds() {
    static const std::vector<ObjectKind> kinds{
        ObjectKind::SolitaryLine,  ObjectKind::SegmentedLine,  ObjectKind::Rect,
        ObjectKind::Circle,        ObjectKind::Ring,           ObjectKind::RegularPolygon,
        ObjectKind::ConvexPolygon, ObjectKind::ChatoyantPolygon, ObjectKind::Sector,
        ObjectKind::Crescent,      ObjectKind::TextM,          ObjectKind::TextMR,
        ObjectKind::SimpleHouse,
    };
    return kinds;
}

/// Random instance of @p kind around @p c, sized 20 to 80 units.
inline std::unique_ptr<MovableObject> random_shape(Rng& rng, ObjectKind kind, const std::string& id, Point c) {
    const double s = rng.uniform(20.0, 80.0);
    const double angle = rng.uniform(-kPi, kPi);
    switch (kind) {
        case ObjectKind::SolitaryLine: {
            const Vector u{std::cos(angle), std::sin(angle)};
            return std::make_unique<SolitaryLine>(id, c - u * s, c + u * s);
        }
        case ObjectKind::SegmentedLine: {
            std::vector<Point> pts;
            const std::size_t n = 2 + rng.index(4);
            Point p = c;
            for (std::size_t i = 0; i < n; ++i) {
                pts.push_back(p);
                p = p + Vector{rng.uniform(10.0, 40.0), rng.uniform(-30.0, 30.0)};
            }
            return std::make_unique<SegmentedLine>(id, pts);
        }
        case ObjectKind::Rect: {
            RectPolicy policy;
            policy.mode = static_cast<RectPolicy::Mode>(rng.index(4));
            policy.side = static_cast<RectSide>(rng.index(4));
            const double w = s;
            const double h = policy.mode == RectPolicy::Mode::FixedRatio ? s / 2.0 : rng.uniform(20.0, 80.0);
            policy.ratio = w / h;
            auto r = std::make_unique<Rect>(id, c, w, h, policy);
            r->set_angle(angle);
            if (rng.chance(0.5)) r->set_partitions({w / 3.0, 2.0 * w / 3.0});
            return r;
        }
        case ObjectKind::Circle: {
            auto circle = std::make_unique<Circle>(id, c, s / 2.0);
            circle->set_angle(angle);
            return circle;
        }
        case ObjectKind::Ring:
            return std::make_unique<Ring>(id, c, s * 0.25, s * 0.6, std::vector<double>{angle, angle + 2.0});
        case ObjectKind::RegularPolygon:
            return std::make_unique<RegularPolygon>(id, c, s / 2.0, 3 + rng.index(6), angle);
        case ObjectKind::ConvexPolygon: {
            std::vector<Point> pts;
            const std::size_t n = 3 + rng.index(5);
            for (std::size_t i = 0; i < n; ++i) {
                const double a = angle + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
                pts.push_back(c + Vector{std::cos(a), std::sin(a)} * (s / 2.0 * rng.uniform(0.8, 1.0)));
            }
            return std::make_unique<ConvexPolygon>(id, pts);
        }
        case ObjectKind::ChatoyantPolygon: {
            std::vector<Point> pts;
            const std::size_t n = 3 + rng.index(5);
            for (std::size_t i = 0; i < n; ++i) {
                const double a = angle + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
                pts.push_back(c + Vector{std::cos(a), std::sin(a)} * (s / 2.0 * rng.uniform(0.5, 1.0)));
            }
            return std::make_unique<ChatoyantPolygon>(id, c, pts);
        }
        case ObjectKind::Sector: {
            // One draw per statement: argument order is unspecified.
            const double sweep = rng.uniform(0.5, 5.5);
            const auto policy = static_cast<SectorPolicy>(rng.index(4));
            return std::make_unique<Sector>(id, c, s / 2.0 + 10.0, angle, sweep, policy);
        }
        case ObjectKind::Crescent: {
            const double r = s / 2.0 + 10.0;
            return std::make_unique<Crescent>(id, c, r, Vector{std::cos(angle), std::sin(angle)} * (r * 0.5),
                                              r * 0.7);
        }
        case ObjectKind::TextM:
        case ObjectKind::TextMR: {
            const std::string text = "text" + std::to_string(rng.index(1000));
            const double font = rng.uniform(10.0, 24.0);
            auto t = std::make_unique<Text>(id, text, c, font, kind == ObjectKind::TextMR);
            if (kind == ObjectKind::TextMR) t->set_angle(angle);
            return t;
        }
        case ObjectKind::SimpleHouse: {
            const double h = rng.uniform(20.0, 60.0);
            const Box body{c.x - s / 2.0, c.y - h / 2.0, c.x + s / 2.0, c.y + h / 2.0};
            return std::make_unique<SimpleHouse>(id, body, Point{c.x + rng.uniform(-s / 2, s / 2), body.max_y + s / 2});
        }
        case ObjectKind::ElasticGroup:
            break;
    }
    return nullptr;
}

/// Pairwise distances between defining points: rigid motions keep them.
inline std::vector<double> pairwise_distances(const MovableObject& obj) {
    const auto pts = obj.defining_points();
    std::vector<double> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back(distance(pts[i], pts[j]));
    }
    return out;
}

}  // namespace movable::testing
