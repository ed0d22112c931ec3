#pragma once

#include <cstdint>

#include "navbench/rng.hpp"
#include "navbench/world_map.hpp"

namespace navbench {

/// Bordered map with n rectangular or L-shaped obstacles, rejection-sampled
/// so the free space stays 4-connected. Throws std::runtime_error after 1000
/// rejected placements.
WorldMap generate_random_map(std::uint64_t seed, double width_m, double height_m,
                             double resolution, int n_static_obstacles);

/// Stamp n additional connectivity-preserving obstacles into a copy of base.
WorldMap add_random_obstacles(const WorldMap& base, int n, Rng& rng);

/// True iff every free cell is 4-connected to every other free cell.
bool free_space_connected(const std::vector<std::uint8_t>& cells, int width, int height);

}  // namespace navbench
