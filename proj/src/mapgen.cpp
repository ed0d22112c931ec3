#include "navbench/mapgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace navbench {

bool free_space_connected(const std::vector<std::uint8_t>& cells, int width, int height) {
    const std::size_t n = cells.size();
    std::size_t free_total = 0;
    std::size_t seed = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (cells[i] == 0) {
            ++free_total;
            if (seed == n) seed = i;
        }
    }
    if (free_total == 0) return false;

    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(seed)};
    seen[seed] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const std::uint32_t id = stack.back();
        stack.pop_back();
        ++reached;
        const int x = static_cast<int>(id % width);
        const int y = static_cast<int>(id / width);
        const int nx[4] = {x + 1, x - 1, x, x};
        const int ny[4] = {y, y, y + 1, y - 1};
        for (int k = 0; k < 4; ++k) {
            if (nx[k] < 0 || ny[k] < 0 || nx[k] >= width || ny[k] >= height) continue;
            const std::size_t nid = static_cast<std::size_t>(ny[k]) * width + nx[k];
            if (!seen[nid] && cells[nid] == 0) {
                seen[nid] = 1;
                stack.push_back(static_cast<std::uint32_t>(nid));
            }
        }
    }
    return reached == free_total;
}

namespace {

void stamp_rect(std::vector<std::uint8_t>& cells, int width, int height,
                int x0, int y0, int x1, int y1) {
    x0 = std::clamp(x0, 0, width - 1);
    x1 = std::clamp(x1, 0, width - 1);
    y0 = std::clamp(y0, 0, height - 1);
    y1 = std::clamp(y1, 0, height - 1);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
            cells[static_cast<std::size_t>(y) * width + x] = 1;
}

}  // namespace

WorldMap add_random_obstacles(const WorldMap& base, int n, Rng& rng) {
    const int w = base.width(), h = base.height();
    const double res = base.resolution();
    const double max_side = std::min(3.0, std::min(base.width_m(), base.height_m()) / 4.0);
    const double min_side = std::min(0.6, max_side);
    std::vector<std::uint8_t> cells = base.cells();

    int placed = 0, rejections = 0;
    while (placed < n) {
        if (rejections >= 1000)
            throw std::runtime_error(
                "add_random_obstacles: placement failed after 1000 rejections; "
                "reduce the obstacle count or enlarge the map");
        // Fixed draw order per attempt: shape, x, y, side_a, side_b.
        const bool l_shape = rng.uniform_int(2) == 1;
        const double ox = rng.uniform(res, base.width_m() - res);
        const double oy = rng.uniform(res, base.height_m() - res);
        const double side_a = rng.uniform(min_side, max_side);
        const double side_b = rng.uniform(min_side, max_side);

        std::vector<std::uint8_t> candidate = cells;
        const int x0 = static_cast<int>(ox / res);
        const int y0 = static_cast<int>(oy / res);
        stamp_rect(candidate, w, h, x0, y0, x0 + static_cast<int>(side_a / res),
                   y0 + static_cast<int>(side_b / res));
        if (l_shape) {
            // Second leg extends from the first rect's corner, swapped sides.
            stamp_rect(candidate, w, h, x0, y0, x0 + static_cast<int>(side_b / res / 2),
                       y0 + static_cast<int>(side_a / res));
        }

        const std::size_t free_cells =
            static_cast<std::size_t>(std::count(candidate.begin(), candidate.end(), 0));
        if (free_cells < cells.size() / 4 || !free_space_connected(candidate, w, h)) {
            ++rejections;
            continue;
        }
        cells = std::move(candidate);
        ++placed;
    }
    return WorldMap(w, h, res, std::move(cells), base.origin());
}

WorldMap generate_random_map(std::uint64_t seed, double width_m, double height_m,
                             double resolution, int n_static_obstacles) {
    if (width_m < 4.0 || height_m < 4.0)
        throw std::invalid_argument("generate_random_map: dimensions must be >= 4 m");
    if (resolution < 0.01 || resolution > 0.5)
        throw std::invalid_argument("generate_random_map: resolution must be in [0.01, 0.5]");
    if (n_static_obstacles < 0)
        throw std::invalid_argument("generate_random_map: obstacle count must be >= 0");

    Rng rng(seed);
    return add_random_obstacles(WorldMap::bordered(width_m, height_m, resolution),
                                n_static_obstacles, rng);
}

}  // namespace navbench
