#pragma once

#include <span>
#include <vector>

#include "navbench/geometry.hpp"
#include "navbench/world_map.hpp"

namespace navbench {

struct LaserScanConfig {
    int beam_count{360};
    double angle_min{-kPi};
    double angle_max{kPi - 2.0 * kPi / 360.0};
    double range_max{3.5};
    Pose2D mounting_offset{};  // sensor pose in the robot frame
};

struct LaserScan {
    std::vector<double> ranges;  // each in (0, range_max]; range_max = no hit
    double stamp{0.0};
    // Beam geometry copied from the config so a scan is self-describing.
    double angle_min{0.0};
    double angle_max{0.0};
    double range_max{0.0};
};

/// Range reported when the sensor origin is in contact with an obstacle.
inline constexpr double kContactRange = 1e-3;

/// Beam angle in the sensor frame; beams are evenly spaced over
/// [angle_min, angle_max] inclusive of both endpoints.
double beam_angle(const LaserScanConfig& cfg, int beam);

/// Simulated 2D lidar: exact DDA grid traversal plus analytic ray-disc
/// intersection against agents; nearest hit wins, clamped to range_max.
/// A sensor origin inside an obstacle yields all-contact ranges.
LaserScan raycast(const WorldMap& map, std::span<const Disc> agents,
                  const Pose2D& robot_pose, const LaserScanConfig& cfg, double stamp);

/// Single-ray grid traversal; returns hit distance or range_max.
double raycast_grid(const WorldMap& map, const Vec2& origin, const Vec2& dir, double range_max);

/// Nearest ray-disc intersection in (0, range_max], or range_max if none.
double raycast_disc(const Vec2& origin, const Vec2& dir, const Disc& disc, double range_max);

}  // namespace navbench
