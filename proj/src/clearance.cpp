#include "navbench/clearance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace navbench {

NearestHit point_square_distance(const Vec2& p, const Vec2& lo, double side) {
    const double x0 = lo.x, x1 = lo.x + side;
    const double y0 = lo.y, y1 = lo.y + side;
    const double cx = std::clamp(p.x, x0, x1);
    const double cy = std::clamp(p.y, y0, y1);
    if (cx != p.x || cy != p.y) {
        return {std::hypot(p.x - cx, p.y - cy), {cx, cy}};
    }
    // Inside: nearest of the four edges, negative depth.
    const double dl = p.x - x0, dr = x1 - p.x;
    const double db = p.y - y0, dt = y1 - p.y;
    const double m = std::min(std::min(dl, dr), std::min(db, dt));
    Vec2 closest = p;
    if (m == dl) closest = {x0, p.y};
    else if (m == dr) closest = {x1, p.y};
    else if (m == db) closest = {p.x, y0};
    else closest = {p.x, y1};
    return {-m, closest};
}

namespace {

// Distance from p to a block's bounding rectangle (0 when inside).
double block_aabb_distance(const WorldMap& map, int bx, int by, const Vec2& p) {
    const double res = map.resolution();
    const double x0 = map.origin().x + bx * WorldMap::kBlockCells * res;
    const double y0 = map.origin().y + by * WorldMap::kBlockCells * res;
    const double x1 = std::min(x0 + WorldMap::kBlockCells * res, map.origin().x + map.width_m());
    const double y1 = std::min(y0 + WorldMap::kBlockCells * res, map.origin().y + map.height_m());
    const double dx = std::max({x0 - p.x, 0.0, p.x - x1});
    const double dy = std::max({y0 - p.y, 0.0, p.y - y1});
    return std::hypot(dx, dy);
}

void scan_block(const WorldMap& map, int bx, int by, const Vec2& p, NearestHit& best) {
    const double res = map.resolution();
    for (std::uint32_t id : map.block_cells(bx, by)) {
        const int cx = static_cast<int>(id % map.width());
        const int cy = static_cast<int>(id / map.width());
        const NearestHit h = point_square_distance(p, map.cell_min(cx, cy), res);
        if (h.distance < best.distance) best = h;
    }
}

}  // namespace

NearestHit nearest_occupied(const WorldMap& map, const Vec2& p) {
    if (!map.contains(p))
        throw std::out_of_range("nearest_occupied: query point outside map");

    int cx, cy;
    map.cell_of(p, cx, cy);
    const int qbx = cx / WorldMap::kBlockCells;
    const int qby = cy / WorldMap::kBlockCells;
    const double block_m = WorldMap::kBlockCells * map.resolution();
    const int max_ring = std::max(map.blocks_x(), map.blocks_y());

    NearestHit best{std::numeric_limits<double>::infinity(), {}};
    for (int r = 0; r <= max_ring; ++r) {
        // Any block on ring r is at least (r-1) block widths away from p.
        if (r >= 1 && (r - 1) * block_m > best.distance) break;
        const int bx0 = qbx - r, bx1 = qbx + r;
        const int by0 = qby - r, by1 = qby + r;
        for (int by = by0; by <= by1; ++by) {
            if (by < 0 || by >= map.blocks_y()) continue;
            const bool edge_row = (by == by0 || by == by1);
            const int step = edge_row ? 1 : (bx1 - bx0 == 0 ? 1 : bx1 - bx0);
            for (int bx = bx0; bx <= bx1; bx += step) {
                if (bx < 0 || bx >= map.blocks_x()) continue;
                if (map.block_cells(bx, by).empty()) continue;
                if (block_aabb_distance(map, bx, by, p) > best.distance) continue;
                scan_block(map, bx, by, p, best);
            }
        }
    }
    if (!std::isfinite(best.distance))
        throw std::logic_error("nearest_occupied: map has no occupied cells");
    return best;
}

double clearance(const WorldMap& map, std::span<const Disc> agents, const Vec2& p) {
    double best = nearest_occupied(map, p).distance;
    for (const Disc& a : agents) {
        best = std::min(best, distance(p, a.center) - a.radius);
    }
    return best;
}

bool check_collision(const WorldMap& map, std::span<const Disc> agents,
                     const Pose2D& pose, double radius) {
    return clearance(map, agents, pose.position()) < radius;
}

}  // namespace navbench
