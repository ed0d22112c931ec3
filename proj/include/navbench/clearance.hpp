#pragma once

#include <span>

#include "navbench/geometry.hpp"
#include "navbench/world_map.hpp"

namespace navbench {

/// Nearest static obstacle from a query point. distance is signed: negative
/// when the point lies inside an occupied cell. closest is the nearest point
/// on the occupied square's boundary.
struct NearestHit {
    double distance{0.0};
    Vec2 closest;
};

/// Signed distance from p to the nearest occupied cell's square boundary.
/// Throws std::out_of_range if p is outside the map rectangle.
NearestHit nearest_occupied(const WorldMap& map, const Vec2& p);

/// min(signed distance to occupied squares, distance to agent disc surfaces).
/// Negative inside an obstacle or agent.
double clearance(const WorldMap& map, std::span<const Disc> agents, const Vec2& p);

/// True iff clearance at the pose position is below the footprint radius.
bool check_collision(const WorldMap& map, std::span<const Disc> agents,
                     const Pose2D& pose, double radius);

/// Signed distance from p to an axis-aligned square and the closest boundary
/// point. Exposed for tests.
NearestHit point_square_distance(const Vec2& p, const Vec2& lo, double side);

}  // namespace navbench
