#pragma once
/**
 * @file demo.hpp
 * @brief Ready-made scenes: a showcase of every object kind and a
 * labyrinth with a ball.
 */

#include <string>
#include <utility>
#include <vector>

#include "movable/scene.hpp"

namespace movable {

/// Every object kind on a 1200 x 800 area, with a group and comments.
Scene demo_scene();

struct Labyrinth {
    Scene scene;
    int cols = 5;
    int rows = 5;
    double cell = 60.0;
    double wall = 4.0;
    double opening = 20.0;
    /// Neighboring cells (row-major indices) joined by an opening.
    std::vector<std::pair<int, int>> openings;
    std::string ball_id = "ball";

    /// Row-major index of the cell holding @p p, or -1 outside the maze.
    int cell_of(Point p) const;
};

/// Square cells with immovable walls, a fixed maze of openings and a ball
/// of fixed radius in cell 0. Overlap is forbidden between everything.
Labyrinth labyrinth(double ball_radius = 15.0, double opening = 20.0);

}  // namespace movable
