#include "navbench/world_map.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace navbench {

WorldMap::WorldMap(int width, int height, double resolution,
                   std::vector<std::uint8_t> cells, Pose2D origin)
    : width_(width), height_(height), resolution_(resolution),
      origin_(origin), cells_(std::move(cells)) {
    validate();
    occupied_count_ = static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [](std::uint8_t c) { return c != 0; }));
    build_index();
}

void WorldMap::validate() const {
    if (width_ < 3 || height_ < 3)
        throw std::invalid_argument("WorldMap: width and height must be >= 3 cells");
    if (!(resolution_ > 0.0))
        throw std::invalid_argument("WorldMap: resolution must be > 0");
    if (origin_.theta != 0.0)
        throw std::invalid_argument("WorldMap: origin theta must be 0");
    if (cells_.size() != static_cast<std::size_t>(width_) * height_)
        throw std::invalid_argument("WorldMap: cell count does not match width*height");
    auto at = [&](int cx, int cy) {
        return cells_[static_cast<std::size_t>(cy) * width_ + cx] != 0;
    };
    for (int cx = 0; cx < width_; ++cx)
        if (!at(cx, 0) || !at(cx, height_ - 1))
            throw std::invalid_argument("WorldMap: boundary cells must be occupied");
    for (int cy = 0; cy < height_; ++cy)
        if (!at(0, cy) || !at(width_ - 1, cy))
            throw std::invalid_argument("WorldMap: boundary cells must be occupied");
}

void WorldMap::build_index() {
    blocks_x_ = (width_ + kBlockCells - 1) / kBlockCells;
    blocks_y_ = (height_ + kBlockCells - 1) / kBlockCells;
    blocks_.assign(static_cast<std::size_t>(blocks_x_) * blocks_y_, {});
    for (int cy = 0; cy < height_; ++cy) {
        for (int cx = 0; cx < width_; ++cx) {
            const std::size_t id = static_cast<std::size_t>(cy) * width_ + cx;
            if (cells_[id] == 0) continue;
            const int bx = cx / kBlockCells, by = cy / kBlockCells;
            blocks_[static_cast<std::size_t>(by) * blocks_x_ + bx].push_back(
                static_cast<std::uint32_t>(id));
        }
    }
}

WorldMap WorldMap::bordered(double width_m, double height_m, double resolution) {
    const int w = static_cast<int>(std::lround(width_m / resolution));
    const int h = static_cast<int>(std::lround(height_m / resolution));
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(w) * h, 0);
    for (int cx = 0; cx < w; ++cx) {
        cells[cx] = 1;
        cells[static_cast<std::size_t>(h - 1) * w + cx] = 1;
    }
    for (int cy = 0; cy < h; ++cy) {
        cells[static_cast<std::size_t>(cy) * w] = 1;
        cells[static_cast<std::size_t>(cy) * w + (w - 1)] = 1;
    }
    return WorldMap(w, h, resolution, std::move(cells));
}

void WorldMap::cell_of(const Vec2& p, int& cx, int& cy) const {
    cx = static_cast<int>(std::floor((p.x - origin_.x) / resolution_));
    cy = static_cast<int>(std::floor((p.y - origin_.y) / resolution_));
    cx = std::clamp(cx, 0, width_ - 1);
    cy = std::clamp(cy, 0, height_ - 1);
}

std::string rle_encode(const std::vector<std::uint8_t>& cells) {
    std::string out;
    std::size_t i = 0;
    while (i < cells.size()) {
        const std::uint8_t bit = cells[i] ? 1 : 0;
        std::size_t run = 1;
        while (i + run < cells.size() && (cells[i + run] ? 1 : 0) == bit) ++run;
        if (!out.empty()) out += ',';
        out += std::to_string(run);
        out += 'x';
        out += bit ? '1' : '0';
        i += run;
    }
    return out;
}

std::vector<std::uint8_t> rle_decode(const std::string& s, std::size_t expected_size) {
    std::vector<std::uint8_t> cells;
    cells.reserve(expected_size);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        const std::string token = s.substr(pos, comma - pos);
        const std::size_t xp = token.find('x');
        if (xp == std::string::npos || xp == 0 || xp + 2 != token.size())
            throw std::invalid_argument("rle_decode: malformed token '" + token + "'");
        std::size_t count = 0;
        for (std::size_t k = 0; k < xp; ++k) {
            const char c = token[k];
            if (c < '0' || c > '9')
                throw std::invalid_argument("rle_decode: malformed count in '" + token + "'");
            count = count * 10 + static_cast<std::size_t>(c - '0');
        }
        const char bitc = token[xp + 1];
        if (bitc != '0' && bitc != '1')
            throw std::invalid_argument("rle_decode: bit must be '0' or '1' in '" + token + "'");
        if (count == 0) throw std::invalid_argument("rle_decode: zero-length run");
        cells.insert(cells.end(), count, bitc == '1' ? 1 : 0);
        pos = comma + 1;
    }
    if (cells.size() != expected_size)
        throw std::invalid_argument("rle_decode: decoded " + std::to_string(cells.size()) +
                                    " cells, expected " + std::to_string(expected_size));
    return cells;
}

std::string map_to_json_string(const WorldMap& map) {
    if (map.origin().x != 0.0 || map.origin().y != 0.0)
        throw std::invalid_argument("map file format has no origin field; origin must be zero");
    nlohmann::json j;
    j["resolution"] = map.resolution();
    j["width"] = map.width();
    j["height"] = map.height();
    j["cells"] = rle_encode(map.cells());
    return j.dump();
}

WorldMap map_from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int w = j.at("width").get<int>();
    const int h = j.at("height").get<int>();
    const double res = j.at("resolution").get<double>();
    auto cells = rle_decode(j.at("cells").get<std::string>(),
                            static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    return WorldMap(w, h, res, std::move(cells));
}

void save_map(const WorldMap& map, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << map_to_json_string(map) << '\n';
}

WorldMap load_map(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return map_from_json_string(ss.str());
}

}  // namespace navbench
