#include "navbench/laser.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace navbench {

double beam_angle(const LaserScanConfig& cfg, int beam) {
    if (cfg.beam_count <= 1) return cfg.angle_min;
    return cfg.angle_min +
           (cfg.angle_max - cfg.angle_min) * beam / static_cast<double>(cfg.beam_count - 1);
}

double raycast_grid(const WorldMap& map, const Vec2& origin, const Vec2& dir, double range_max) {
    const double res = map.resolution();
    int cx, cy;
    map.cell_of(origin, cx, cy);
    if (map.occupied(cx, cy)) return kContactRange;

    const int step_x = dir.x > 0.0 ? 1 : -1;
    const int step_y = dir.y > 0.0 ? 1 : -1;
    const double inf = std::numeric_limits<double>::infinity();
    // Ray parameter at the first vertical / horizontal grid-line crossing.
    double t_max_x = inf, t_max_y = inf, t_delta_x = inf, t_delta_y = inf;
    if (dir.x != 0.0) {
        const double edge = map.origin().x + (cx + (step_x > 0 ? 1 : 0)) * res;
        t_max_x = (edge - origin.x) / dir.x;
        t_delta_x = res / std::abs(dir.x);
    }
    if (dir.y != 0.0) {
        const double edge = map.origin().y + (cy + (step_y > 0 ? 1 : 0)) * res;
        t_max_y = (edge - origin.y) / dir.y;
        t_delta_y = res / std::abs(dir.y);
    }

    while (true) {
        double t_enter;
        if (t_max_x <= t_max_y) {
            t_enter = t_max_x;
            t_max_x += t_delta_x;
            cx += step_x;
        } else {
            t_enter = t_max_y;
            t_max_y += t_delta_y;
            cy += step_y;
        }
        if (t_enter > range_max) return range_max;
        if (!map.in_bounds_cell(cx, cy)) return range_max;  // closed world; defensive
        if (map.occupied(cx, cy)) return std::max(t_enter, kContactRange);
    }
}

double raycast_disc(const Vec2& origin, const Vec2& dir, const Disc& disc, double range_max) {
    const Vec2 oc = origin - disc.center;
    const double b = oc.dot(dir);
    const double c = oc.squared_norm() - disc.radius * disc.radius;
    if (c <= 0.0) return kContactRange;  // origin inside the disc
    const double disc_arg = b * b - c;
    if (disc_arg < 0.0) return range_max;
    const double t = -b - std::sqrt(disc_arg);
    if (t <= 0.0 || t > range_max) return range_max;
    return std::max(t, kContactRange);
}

LaserScan raycast(const WorldMap& map, std::span<const Disc> agents,
                  const Pose2D& robot_pose, const LaserScanConfig& cfg, double stamp) {
    if (cfg.beam_count < 1) throw std::invalid_argument("raycast: beam_count must be >= 1");
    if (!(cfg.angle_min < cfg.angle_max) && cfg.beam_count > 1)
        throw std::invalid_argument("raycast: angle_min must be < angle_max");
    if (!(cfg.range_max > 0.0)) throw std::invalid_argument("raycast: range_max must be > 0");

    const Pose2D sensor = robot_pose.compose(cfg.mounting_offset);
    const Vec2 origin = sensor.position();
    LaserScan scan;
    scan.stamp = stamp;
    scan.angle_min = cfg.angle_min;
    scan.angle_max = cfg.angle_max;
    scan.range_max = cfg.range_max;
    scan.ranges.assign(static_cast<std::size_t>(cfg.beam_count), cfg.range_max);

    if (!map.contains(origin))
        throw std::out_of_range("raycast: sensor origin outside map");
    int ocx, ocy;
    map.cell_of(origin, ocx, ocy);
    if (map.occupied(ocx, ocy)) {
        std::fill(scan.ranges.begin(), scan.ranges.end(), kContactRange);
        return scan;
    }

    for (int i = 0; i < cfg.beam_count; ++i) {
        const Vec2 dir = unit_from_angle(sensor.theta + beam_angle(cfg, i));
        double r = raycast_grid(map, origin, dir, cfg.range_max);
        for (const Disc& a : agents) {
            r = std::min(r, raycast_disc(origin, dir, a, cfg.range_max));
        }
        scan.ranges[static_cast<std::size_t>(i)] = r;
    }
    return scan;
}

}  // namespace navbench
