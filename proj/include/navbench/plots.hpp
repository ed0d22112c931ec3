#pragma once

#include <span>
#include <string>
#include <vector>

#include "navbench/episode.hpp"
#include "navbench/metrics.hpp"

namespace navbench {

/// Display unit for a metric, matching the evaluation table.
std::string metric_unit(const std::string& metric);

struct QuantPlotLayout {
    double width{560.0};
    double height{360.0};
    double margin{54.0};
};

/// Box-with-points chart: one box (class="box") per planner for one metric,
/// episodes overlaid as points. Deterministic for fixed input. Returns an
/// empty string when the metric is absent from every report (caller omits
/// the panel and logs a notice).
std::string plot_quantitative(std::span<const MetricsReport> reports, const std::string& metric,
                              const QuantPlotLayout& layout = {});

/// Value -> pixel-y map used by plot_quantitative; exposed so consumers can
/// verify box geometry against the CSV values.
struct ValueAxis {
    double v_lo{0.0}, v_hi{1.0};
    double px_top{0.0}, px_bottom{1.0};
    double to_px(double v) const {
        return px_bottom - (v - v_lo) / (v_hi - v_lo) * (px_bottom - px_top);
    }
};
ValueAxis quantitative_axis(std::span<const double> values, const QuantPlotLayout& layout);

struct QualPlotLayout {
    double target_width{720.0};
    double margin{24.0};
    int max_planners{4};  // more than this triggers the warning
};

/// World -> pixel affine map with uniform scale and y-flip.
struct WorldTransform {
    double scale{1.0};
    double offset_x{0.0};
    double offset_y{0.0};  // pixel y of world y = 0 (before flip math)
    Vec2 world_origin;
    double px_height{0.0};
    double margin{0.0};

    Vec2 to_px(const Vec2& world) const {
        return {margin + (world.x - world_origin.x) * scale,
                px_height - margin - (world.y - world_origin.y) * scale};
    }
    Vec2 to_world(const Vec2& px) const {
        return {world_origin.x + (px.x - margin) / scale,
                world_origin.y + (px_height - margin - px.y) / scale};
    }
};
WorldTransform qualitative_transform(const WorldMap& map, const QualPlotLayout& layout);

/// Trajectory map over the shared occupancy grid: occupied cells dark, one
/// colored polyline (class="trajectory") per robot trajectory, thin neutral
/// pedestrian paths with final-position markers, one red circle
/// (class="collision") per collision event, and a planner color legend.
/// Throws std::invalid_argument when records disagree on the map. Requests
/// covering more than max_planners emit a warning on stderr but still render.
std::string plot_qualitative(std::span<const EpisodeRecord> records,
                             const WorldMap& map, const QualPlotLayout& layout = {});

}  // namespace navbench
