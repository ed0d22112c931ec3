#include "navbench/pathfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "navbench/clearance.hpp"

namespace navbench {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

std::vector<std::uint8_t> inflate_occupancy(const WorldMap& map, double radius) {
    std::vector<std::uint8_t> blocked(map.cells().size(), 0);
    for (int cy = 0; cy < map.height(); ++cy) {
        for (int cx = 0; cx < map.width(); ++cx) {
            const std::size_t id = static_cast<std::size_t>(cy) * map.width() + cx;
            if (map.occupied(cx, cy)) {
                blocked[id] = 1;
            } else if (radius > 0.0) {
                blocked[id] = nearest_occupied(map, map.cell_center(cx, cy)).distance < radius;
            }
        }
    }
    return blocked;
}

std::optional<GridPath> path_exists_on(const WorldMap& map,
                                       const std::vector<std::uint8_t>& blocked,
                                       const Vec2& a, const Vec2& b) {
    int ax, ay, bx, by;
    map.cell_of(a, ax, ay);
    map.cell_of(b, bx, by);
    const int w = map.width(), h = map.height();
    auto id_of = [w](int x, int y) { return static_cast<std::size_t>(y) * w + x; };
    if (blocked[id_of(ax, ay)] || blocked[id_of(bx, by)])
        throw std::invalid_argument("path_exists: endpoint cell is occupied");

    const double res = map.resolution();
    auto heuristic = [&](int x, int y) {
        const double dx = std::abs(x - bx), dy = std::abs(y - by);
        return res * (std::max(dx, dy) + (kSqrt2 - 1.0) * std::min(dx, dy));
    };

    const std::size_t n = blocked.size();
    std::vector<double> g(n, std::numeric_limits<double>::infinity());
    std::vector<std::uint32_t> parent(n, std::numeric_limits<std::uint32_t>::max());
    std::vector<std::uint8_t> closed(n, 0);

    struct Node {
        double f;
        double g;
        std::uint32_t id;
        bool operator<(const Node& o) const {
            // Deterministic order: smallest f, then largest g, then lowest id.
            if (f != o.f) return f > o.f;
            if (g != o.g) return g < o.g;
            return id > o.id;
        }
    };
    std::priority_queue<Node> open;
    const std::uint32_t start = static_cast<std::uint32_t>(id_of(ax, ay));
    const std::uint32_t goal = static_cast<std::uint32_t>(id_of(bx, by));
    g[start] = 0.0;
    open.push({heuristic(ax, ay), 0.0, start});

    static constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};

    while (!open.empty()) {
        const Node node = open.top();
        open.pop();
        if (closed[node.id]) continue;
        closed[node.id] = 1;
        if (node.id == goal) break;
        const int x = static_cast<int>(node.id % w);
        const int y = static_cast<int>(node.id / w);
        for (int k = 0; k < 8; ++k) {
            const int nx = x + kDx[k], ny = y + kDy[k];
            if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
            const std::size_t nid = id_of(nx, ny);
            if (blocked[nid]) continue;
            const bool diagonal = k >= 4;
            // No corner cutting: a diagonal move needs both orthogonal
            // neighbors free.
            if (diagonal && (blocked[id_of(x, ny)] || blocked[id_of(nx, y)])) continue;
            const double cost = node.g + (diagonal ? kSqrt2 * res : res);
            if (cost < g[nid]) {
                g[nid] = cost;
                parent[nid] = node.id;
                open.push({cost + heuristic(nx, ny), cost, static_cast<std::uint32_t>(nid)});
            }
        }
    }

    if (!closed[goal]) return std::nullopt;
    GridPath path;
    path.cost = g[goal];
    for (std::uint32_t cur = goal;;) {
        path.cells.emplace_back(static_cast<int>(cur % w), static_cast<int>(cur / w));
        if (cur == start) break;
        cur = parent[cur];
    }
    std::reverse(path.cells.begin(), path.cells.end());
    return path;
}

std::optional<GridPath> path_exists(const WorldMap& map, const Vec2& a, const Vec2& b,
                                    double inflate_radius) {
    return path_exists_on(map, inflate_occupancy(map, inflate_radius), a, b);
}

std::vector<Vec2> path_to_world(const WorldMap& map, const GridPath& path) {
    std::vector<Vec2> out;
    out.reserve(path.cells.size());
    for (const auto& [cx, cy] : path.cells) out.push_back(map.cell_center(cx, cy));
    return out;
}

}  // namespace navbench
