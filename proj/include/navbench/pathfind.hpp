#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "navbench/geometry.hpp"
#include "navbench/world_map.hpp"

namespace navbench {

struct GridPath {
    std::vector<std::pair<int, int>> cells;  // inclusive a -> b
    double cost{0.0};                        // meters
};

/// Per-cell blocked flags after inflating obstacles by `radius`: a cell is
/// blocked when its center lies closer than `radius` to any occupied square.
std::vector<std::uint8_t> inflate_occupancy(const WorldMap& map, double radius);

/// A* on the 8-connected free grid (octile heuristic, no corner cutting,
/// costs in meters). Returns the optimal path or nullopt when none exists.
/// Throws std::invalid_argument if either endpoint cell is blocked.
std::optional<GridPath> path_exists(const WorldMap& map, const Vec2& a, const Vec2& b,
                                    double inflate_radius = 0.0);

/// Same search on a precomputed blocked grid (shared by repeated queries).
std::optional<GridPath> path_exists_on(const WorldMap& map,
                                       const std::vector<std::uint8_t>& blocked,
                                       const Vec2& a, const Vec2& b);

/// Path cells as world points (cell centers).
std::vector<Vec2> path_to_world(const WorldMap& map, const GridPath& path);

}  // namespace navbench
