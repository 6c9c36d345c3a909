#pragma once
/**
 * @file footprint.hpp
 * @brief Convex decomposition of object footprints for overlap rules.
 *
 * A piece is the convex hull of one to n points inflated by a radius:
 * one point gives a disk, two a capsule, three or more a convex polygon
 * (counterclockwise). Touching pieces do not overlap; only interior
 * penetration counts.
 */

#include <vector>

#include "movable/geometry.hpp"

namespace movable {

/// Penetration depth below which contact counts as touching.
inline constexpr double kOverlapTolerance = 1e-9;

struct Piece {
    std::vector<Point> hull;
    double radius = 0.0;

    static Piece disk(Point c, double r) { return {{c}, r}; }
    static Piece capsule(Point a, Point b, double r) { return {{a, b}, r}; }
    /// Orients the polygon counterclockwise.
    static Piece polygon(std::vector<Point> pts);
    /// Convex hull of arbitrary points.
    static Piece hull_of(std::vector<Point> pts);

    Piece translated(Vector d) const;
    Box bounds() const;
};

using Footprint = std::vector<Piece>;

Footprint translated(const Footprint& fp, Vector d);
Box bounds(const Footprint& fp);

/// Hull distance minus radii; negative values are penetration depths.
double separation(const Piece& a, const Piece& b);

bool interior_overlap(const Piece& a, const Piece& b);
bool interior_overlap(const Footprint& a, const Footprint& b);

/// Unit direction pushing @p a away from @p b at (near) contact.
Vector contact_normal(const Piece& a, const Piece& b);

}  // namespace movable
