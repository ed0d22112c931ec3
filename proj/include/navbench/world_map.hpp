#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "navbench/geometry.hpp"

namespace navbench {

/// Occupancy grid. Immutable once constructed; the constructor validates the
/// closed-world invariant (every boundary cell occupied) and builds a block
/// index of occupied cells used by nearest-obstacle queries.
///
/// Cell (cx, cy) covers the world square
///   [origin.x + cx*res, origin.x + (cx+1)*res] x [origin.y + cy*res, ...].
/// Row 0 is the minimum-y row.
class WorldMap {
public:
    WorldMap() = default;
    WorldMap(int width, int height, double resolution,
             std::vector<std::uint8_t> cells, Pose2D origin = {});

    /// Empty map with a one-cell occupied border.
    static WorldMap bordered(double width_m, double height_m, double resolution);

    int width() const { return width_; }
    int height() const { return height_; }
    double resolution() const { return resolution_; }
    const Pose2D& origin() const { return origin_; }
    double width_m() const { return width_ * resolution_; }
    double height_m() const { return height_ * resolution_; }
    const std::vector<std::uint8_t>& cells() const { return cells_; }

    bool in_bounds_cell(int cx, int cy) const {
        return cx >= 0 && cy >= 0 && cx < width_ && cy < height_;
    }
    /// Out-of-bounds cells count as occupied (closed world).
    bool occupied(int cx, int cy) const {
        if (!in_bounds_cell(cx, cy)) return true;
        return cells_[static_cast<std::size_t>(cy) * width_ + cx] != 0;
    }

    /// True if the world point lies inside the map rectangle.
    bool contains(const Vec2& p) const {
        return p.x >= origin_.x && p.y >= origin_.y &&
               p.x <= origin_.x + width_m() && p.y <= origin_.y + height_m();
    }

    /// Cell containing a world point (clamped to the grid).
    void cell_of(const Vec2& p, int& cx, int& cy) const;
    Vec2 cell_center(int cx, int cy) const {
        return {origin_.x + (cx + 0.5) * resolution_, origin_.y + (cy + 0.5) * resolution_};
    }
    /// Lower corner of a cell's square.
    Vec2 cell_min(int cx, int cy) const {
        return {origin_.x + cx * resolution_, origin_.y + cy * resolution_};
    }

    std::size_t occupied_count() const { return occupied_count_; }
    std::size_t free_count() const { return cells_.size() - occupied_count_; }

    bool operator==(const WorldMap& o) const {
        return width_ == o.width_ && height_ == o.height_ &&
               resolution_ == o.resolution_ && origin_ == o.origin_ && cells_ == o.cells_;
    }

    // Block index over occupied cells; used by nearest-obstacle ring search.
    static constexpr int kBlockCells = 8;
    int blocks_x() const { return blocks_x_; }
    int blocks_y() const { return blocks_y_; }
    const std::vector<std::uint32_t>& block_cells(int bx, int by) const {
        return blocks_[static_cast<std::size_t>(by) * blocks_x_ + bx];
    }

private:
    void build_index();
    void validate() const;

    int width_{0};
    int height_{0};
    double resolution_{0.0};
    Pose2D origin_{};
    std::vector<std::uint8_t> cells_;
    std::size_t occupied_count_{0};

    int blocks_x_{0};
    int blocks_y_{0};
    std::vector<std::vector<std::uint32_t>> blocks_;  // occupied cell linear ids
};

/// Canonical run-length encoding of the flat row-major bit sequence:
/// comma-separated maximal runs "<count>x<bit>", e.g. "40x1,5x0,3x1".
std::string rle_encode(const std::vector<std::uint8_t>& cells);
std::vector<std::uint8_t> rle_decode(const std::string& s, std::size_t expected_size);

/// Map file format: JSON object {"resolution", "width", "height", "cells"}.
/// The format carries no origin; saving a map with a nonzero origin throws.
std::string map_to_json_string(const WorldMap& map);
WorldMap map_from_json_string(const std::string& text);
void save_map(const WorldMap& map, const std::string& path);
WorldMap load_map(const std::string& path);

}  // namespace navbench
