#include "navbench/plots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include "navbench/svg.hpp"

namespace navbench {

std::string metric_unit(const std::string& metric) {
    if (metric == "time_to_goal") return "s";
    if (metric == "path_length") return "m";
    if (metric == "velocity_avg") return "m/s";
    if (metric == "acceleration_avg") return "m/s^2";
    if (metric == "jerk_avg") return "m/s^3";
    if (metric.rfind("curvature", 0) == 0)
        return metric == "curvature_normalized" ? "-" : "1/m";
    if (metric == "angle_over_length") return "rad/m";
    if (metric.rfind("clearing_dist", 0) == 0)
        return metric == "clearing_dist_normalized" ? "-" : "m";
    return "-";  // collisions, roughness, success
}

ValueAxis quantitative_axis(std::span<const double> values, const QuantPlotLayout& layout) {
    double lo = values.empty() ? 0.0 : values[0];
    double hi = lo;
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi - lo < 1e-12) {  // flat data: open a unit window around it
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    ValueAxis axis;
    axis.v_lo = lo - pad;
    axis.v_hi = hi + pad;
    axis.px_top = layout.margin;
    axis.px_bottom = layout.height - layout.margin;
    return axis;
}

namespace {

struct BoxStats {
    double q1, median, q3, lo, hi;
};

// Quartiles by linear interpolation over the sorted sample.
BoxStats box_stats(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    auto quantile = [&](double q) {
        const double idx = q * (static_cast<double>(values.size()) - 1.0);
        const std::size_t lo = static_cast<std::size_t>(std::floor(idx));
        const std::size_t hi = static_cast<std::size_t>(std::ceil(idx));
        const double frac = idx - static_cast<double>(lo);
        return values[lo] * (1.0 - frac) + values[hi] * frac;
    };
    return {quantile(0.25), quantile(0.5), quantile(0.75), values.front(), values.back()};
}

}  // namespace

std::string plot_quantitative(std::span<const MetricsReport> reports, const std::string& metric,
                              const QuantPlotLayout& layout) {
    std::map<std::string, std::vector<double>> by_planner;
    for (const MetricsReport& m : reports) {
        if (auto v = metric_value(m, metric)) by_planner[m.planner_id].push_back(*v);
    }
    if (by_planner.empty()) return "";

    std::vector<double> all;
    for (const auto& [id, values] : by_planner)
        all.insert(all.end(), values.begin(), values.end());
    const ValueAxis axis = quantitative_axis(all, layout);

    SvgWriter svg(layout.width, layout.height);
    svg.rect(0, 0, layout.width, layout.height, "#ffffff");
    // Axis frame and labels.
    svg.line(layout.margin, axis.px_top, layout.margin, axis.px_bottom, "#000000", 1.0);
    svg.line(layout.margin, axis.px_bottom, layout.width - layout.margin, axis.px_bottom,
             "#000000", 1.0);
    svg.text(layout.width / 2.0, layout.height - 8.0, metric + " [" + metric_unit(metric) + "]",
             13.0, "middle");
    for (int i = 0; i <= 4; ++i) {
        const double v = axis.v_lo + (axis.v_hi - axis.v_lo) * i / 4.0;
        const double y = axis.to_px(v);
        svg.line(layout.margin - 4.0, y, layout.margin, y, "#000000", 1.0);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3g", v);
        svg.text(layout.margin - 7.0, y + 4.0, buf, 10.0, "end");
    }

    const double span = layout.width - 2.0 * layout.margin;
    const double slot = span / static_cast<double>(by_planner.size());
    const double box_w = std::min(48.0, slot * 0.5);

    std::size_t index = 0;
    for (const auto& [planner, values] : by_planner) {  // std::map: id sort order
        const std::string color = plot_palette()[index % plot_palette().size()];
        const double cx = layout.margin + slot * (static_cast<double>(index) + 0.5);
        const BoxStats stats = box_stats(values);
        const double y_q1 = axis.to_px(stats.q1), y_q3 = axis.to_px(stats.q3);
        const double y_med = axis.to_px(stats.median);
        const double y_lo = axis.to_px(stats.lo), y_hi = axis.to_px(stats.hi);

        svg.open_group("box");
        svg.line(cx, y_lo, cx, y_q1, color, 1.0, "whisker");
        svg.line(cx, y_q3, cx, y_hi, color, 1.0, "whisker");
        svg.rect(cx - box_w / 2.0, y_q3, box_w, y_q1 - y_q3, "none", "iqr");
        svg.line(cx - box_w / 2.0, y_q1, cx + box_w / 2.0, y_q1, color, 1.5);
        svg.line(cx - box_w / 2.0, y_q3, cx + box_w / 2.0, y_q3, color, 1.5);
        svg.line(cx - box_w / 2.0, y_lo, cx + box_w / 2.0, y_lo, color, 1.0);
        svg.line(cx - box_w / 2.0, y_hi, cx + box_w / 2.0, y_hi, color, 1.0);
        svg.line(cx - box_w / 2.0, y_med, cx + box_w / 2.0, y_med, color, 2.5, "median");
        svg.close_group();

        // Episode points, deterministic horizontal spread by index.
        svg.open_group("points");
        for (std::size_t k = 0; k < values.size(); ++k) {
            const double fx =
                cx - box_w / 2.0 +
                box_w * (values.size() == 1
                             ? 0.5
                             : static_cast<double>(k) / (static_cast<double>(values.size()) - 1));
            svg.circle(fx, axis.to_px(values[k]), 2.0, color, "point");
        }
        svg.close_group();

        svg.text(cx, axis.px_bottom + 16.0, planner, 11.0, "middle");
        ++index;
    }
    return svg.str();
}

WorldTransform qualitative_transform(const WorldMap& map, const QualPlotLayout& layout) {
    WorldTransform t;
    t.margin = layout.margin;
    t.world_origin = map.origin().position();
    t.scale = (layout.target_width - 2.0 * layout.margin) / map.width_m();
    t.px_height = map.height_m() * t.scale + 2.0 * layout.margin;
    return t;
}

std::string plot_qualitative(std::span<const EpisodeRecord> records, const WorldMap& map,
                             const QualPlotLayout& layout) {
    if (records.empty()) throw std::invalid_argument("plot_qualitative: no records");
    for (const EpisodeRecord& r : records) {
        if (!(r.meta.map == map))
            throw std::invalid_argument("plot_qualitative: records come from different maps");
    }

    std::set<std::string> planner_ids;
    for (const EpisodeRecord& r : records) planner_ids.insert(r.meta.planner_id);
    if (static_cast<int>(planner_ids.size()) > layout.max_planners) {
        std::fprintf(stderr,
                     "navbench: warning: %zu planners requested; it is recommended to "
                     "plot no more than four planners at once\n",
                     planner_ids.size());
    }
    std::map<std::string, std::string> color_of;
    std::size_t ci = 0;
    for (const std::string& id : planner_ids)
        color_of[id] = plot_palette()[ci++ % plot_palette().size()];

    const WorldTransform t = qualitative_transform(map, layout);
    const double width = layout.target_width;
    const double height = t.px_height;
    SvgWriter svg(width, height);
    svg.rect(0, 0, width, height, "#ffffff");

    // Occupancy: horizontal runs of occupied cells as dark rects.
    svg.open_group("map");
    const double res = map.resolution();
    for (int cy = 0; cy < map.height(); ++cy) {
        int run_start = -1;
        for (int cx = 0; cx <= map.width(); ++cx) {
            const bool occ = cx < map.width() && map.occupied(cx, cy);
            if (occ && run_start < 0) run_start = cx;
            if (!occ && run_start >= 0) {
                const Vec2 lo = t.to_px(map.cell_min(run_start, cy + 1));
                svg.rect(lo.x, lo.y, (cx - run_start) * res * t.scale, res * t.scale,
                         "#3a3a3a", "occupied");
                run_start = -1;
            }
        }
    }
    svg.close_group();

    // Pedestrian paths underneath the robot trajectories.
    svg.open_group("pedestrians");
    for (const EpisodeRecord& record : records) {
        std::map<int, std::vector<Vec2>> paths;
        for (const Frame& frame : record.frames)
            for (const auto& [id, pos] : frame.pedestrians) paths[id].push_back(t.to_px(pos));
        for (const auto& [id, path] : paths) {
            svg.polyline(path, "#9a9a9a", 0.8, "pedestrian");
            if (!path.empty())
                svg.circle(path.back().x, path.back().y, 3.0, "#ffffff", "pedestrian-final",
                           "#9a9a9a");
        }
    }
    svg.close_group();

    svg.open_group("trajectories");
    for (const EpisodeRecord& record : records) {
        const std::size_t robots =
            record.frames.empty() ? 0 : record.frames.front().robots.size();
        for (std::size_t r = 0; r < robots; ++r) {
            std::vector<Vec2> path;
            path.reserve(record.frames.size());
            for (const Frame& frame : record.frames)
                path.push_back(t.to_px(frame.robots[r].pose.position()));
            svg.polyline(path, color_of[record.meta.planner_id], 1.6, "trajectory");
        }
    }
    svg.close_group();

    svg.open_group("collisions");
    for (const EpisodeRecord& record : records) {
        for (const CollisionEvent& e : record.collision_events) {
            const Vec2 p = t.to_px(e.position);
            svg.circle(p.x, p.y, 5.0, "none", "collision", "#ff0000");
        }
    }
    svg.close_group();

    svg.open_group("legend");
    double ly = layout.margin + 4.0;
    for (const std::string& id : planner_ids) {
        svg.line(width - layout.margin - 70.0, ly, width - layout.margin - 46.0, ly,
                 color_of[id], 3.0);
        svg.text(width - layout.margin - 40.0, ly + 4.0, id, 11.0);
        ly += 16.0;
    }
    svg.close_group();

    return svg.str();
}

}  // namespace navbench
