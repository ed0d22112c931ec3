#include "navbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace navbench {

const std::map<std::string, std::string>& metric_formulas() {
    static const std::map<std::string, std::string> formulas{
        {"success", "outcome_success_and_collisions_lt_2.v1"},
        {"collisions", "debounced_rising_edges.v1"},
        {"time_to_goal", "last_frame_t_of_success.v1"},
        {"path_length", "sum_segment_norms.v1"},
        {"velocity_avg", "mean_abs_linear_speed.v1"},
        {"acceleration_avg", "mean_abs_speed_first_diff.v1"},
        {"jerk_avg", "mean_abs_speed_second_diff.v1"},
        {"curvature", "menger_triplets_degenerate_zero.v1"},
        {"curvature_normalized", "total_turning_sum_k_ds.v1"},
        {"angle_over_length", "sum_abs_heading_diff_over_path_length.v1"},
        {"roughness", "mean_sq_heading_second_diff_over_dt4.v1"},
        {"clearing_dist", "per_frame_clearance_stats.v1"},
        {"clearing_dist_normalized", "avg_over_robot_radius.v1"},
    };
    return formulas;
}

double menger_curvature(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double d_ab = distance(a, b);
    const double d_bc = distance(b, c);
    const double d_ac = distance(a, c);
    if (d_ab < 1e-6 || d_bc < 1e-6 || d_ac < 1e-6) return 0.0;
    const double cross = (b - a).cross(c - a);  // 2 * signed area
    return 2.0 * std::abs(cross) / (d_ab * d_bc * d_ac);
}

MetricsReport compute_metrics(const EpisodeRecord& record, int robot_index) {
    if (record.frames.empty())
        throw std::invalid_argument("compute_metrics: record has no frames");
    const std::size_t r = static_cast<std::size_t>(robot_index);
    if (r >= record.frames.front().robots.size())
        throw std::invalid_argument("compute_metrics: robot index out of range");

    MetricsReport m;
    m.scenario_id = record.meta.scenario_id;
    m.planner_id = record.meta.planner_id;
    m.episode_index = record.meta.episode_index;
    m.robot_index = robot_index;
    m.outcome = to_string(record.outcome);

    int collisions = 0;
    for (const CollisionEvent& e : record.collision_events)
        if (e.robot == robot_index) ++collisions;
    m.collisions = collisions;
    m.success = record.outcome == Outcome::Success && collisions < 2;
    if (record.outcome == Outcome::Success) m.time_to_goal = record.frames.back().t;

    const std::size_t n = record.frames.size();
    std::vector<Vec2> pos(n);
    std::vector<double> heading(n), speed(n), clear(n);
    for (std::size_t k = 0; k < n; ++k) {
        const RobotFrame& rf = record.frames[k].robots[r];
        pos[k] = rf.pose.position();
        heading[k] = rf.pose.theta;
        speed[k] = std::abs(rf.twist.v);
        clear[k] = rf.clearance;
    }
    const double dt = record.meta.control_dt;

    double path_length = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) path_length += distance(pos[k], pos[k + 1]);
    m.path_length = path_length;

    double speed_sum = 0.0;
    for (double s : speed) speed_sum += s;
    m.velocity_avg = speed_sum / static_cast<double>(n);

    double cmin = clear[0], cmax = clear[0], csum = 0.0;
    for (double c : clear) {
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
        csum += c;
    }
    const double radius = record.meta.robot_models[r].radius;
    m.clearing_dist_avg = csum / static_cast<double>(n);
    m.clearing_dist_min = cmin;
    m.clearing_dist_max = cmax;
    m.clearing_dist_normalized = *m.clearing_dist_avg / radius;

    if (n < 3) return m;  // derivative metrics need >= 3 frames

    double acc_sum = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) acc_sum += std::abs(speed[k + 1] - speed[k]) / dt;
    m.acceleration_avg = acc_sum / static_cast<double>(n - 1);

    double jerk_sum = 0.0;
    for (std::size_t k = 0; k + 2 < n; ++k)
        jerk_sum += std::abs(speed[k + 2] - 2.0 * speed[k + 1] + speed[k]) / (dt * dt);
    m.jerk_avg = jerk_sum / static_cast<double>(n - 2);

    double k_min = std::numeric_limits<double>::infinity();
    double k_max = -std::numeric_limits<double>::infinity();
    double k_sum = 0.0, turning = 0.0;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double kappa = menger_curvature(pos[k - 1], pos[k], pos[k + 1]);
        k_min = std::min(k_min, kappa);
        k_max = std::max(k_max, kappa);
        k_sum += kappa;
        // Arc share of the middle point: half of both adjacent segments.
        const double ds = 0.5 * (distance(pos[k - 1], pos[k]) + distance(pos[k], pos[k + 1]));
        turning += kappa * ds;
    }
    m.curvature_avg = k_sum / static_cast<double>(n - 2);
    m.curvature_min = k_min;
    m.curvature_max = k_max;
    m.curvature_normalized = turning;

    double abs_heading_change = 0.0;
    std::vector<double> dheading(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        dheading[k] = normalize_angle(heading[k + 1] - heading[k]);
        abs_heading_change += std::abs(dheading[k]);
    }
    m.angle_over_length = path_length > 1e-12 ? abs_heading_change / path_length : 0.0;

    double rough_sum = 0.0;
    for (std::size_t k = 0; k + 1 < dheading.size(); ++k) {
        const double second = (dheading[k + 1] - dheading[k]) / (dt * dt);
        rough_sum += second * second;
    }
    m.roughness = rough_sum / static_cast<double>(n - 2);

    return m;
}

std::vector<MetricsReport> compute_all_metrics(const EpisodeRecord& record) {
    std::vector<MetricsReport> out;
    if (record.frames.empty()) {
        // Frameless records (e.g. planner_error during init) still yield a row.
        MetricsReport m;
        m.scenario_id = record.meta.scenario_id;
        m.planner_id = record.meta.planner_id;
        m.episode_index = record.meta.episode_index;
        m.outcome = to_string(record.outcome);
        m.success = false;
        out.push_back(std::move(m));
        return out;
    }
    const std::size_t robots = record.frames.front().robots.size();
    for (std::size_t r = 0; r < robots; ++r)
        out.push_back(compute_metrics(record, static_cast<int>(r)));
    return out;
}

const std::vector<std::string>& aggregated_metric_names() {
    static const std::vector<std::string> names{
        "collisions",           "time_to_goal",        "path_length",
        "velocity_avg",         "acceleration_avg",    "jerk_avg",
        "curvature_avg",        "curvature_max",       "curvature_min",
        "curvature_normalized", "angle_over_length",   "roughness",
        "clearing_dist_avg",    "clearing_dist_max",   "clearing_dist_min",
        "clearing_dist_normalized"};
    return names;
}

std::optional<double> metric_value(const MetricsReport& m, const std::string& name) {
    if (name == "collisions") return static_cast<double>(m.collisions);
    if (name == "time_to_goal") return m.time_to_goal;
    if (name == "path_length") return m.path_length;
    if (name == "velocity_avg") return m.velocity_avg;
    if (name == "acceleration_avg") return m.acceleration_avg;
    if (name == "jerk_avg") return m.jerk_avg;
    if (name == "curvature_avg") return m.curvature_avg;
    if (name == "curvature_max") return m.curvature_max;
    if (name == "curvature_min") return m.curvature_min;
    if (name == "curvature_normalized") return m.curvature_normalized;
    if (name == "angle_over_length") return m.angle_over_length;
    if (name == "roughness") return m.roughness;
    if (name == "clearing_dist_avg") return m.clearing_dist_avg;
    if (name == "clearing_dist_max") return m.clearing_dist_max;
    if (name == "clearing_dist_min") return m.clearing_dist_min;
    if (name == "clearing_dist_normalized") return m.clearing_dist_normalized;
    throw std::invalid_argument("unknown metric '" + name + "'");
}

namespace {

StatSummary summarize(std::vector<double> values) {
    StatSummary s;
    s.count = static_cast<int>(values.size());
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    const std::size_t n = values.size();
    s.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(n);
    double var = 0.0;
    for (double v : values) var += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(var / static_cast<double>(n));
    return s;
}

}  // namespace

std::vector<AggregateReport> aggregate(std::span<const MetricsReport> reports) {
    if (reports.empty()) throw std::invalid_argument("aggregate: no reports");

    std::map<std::pair<std::string, std::string>, std::vector<const MetricsReport*>> groups;
    for (const MetricsReport& m : reports)
        groups[{m.scenario_id, m.planner_id}].push_back(&m);

    std::vector<AggregateReport> out;
    for (const auto& [key, members] : groups) {
        AggregateReport agg;
        agg.scenario_id = key.first;
        agg.planner_id = key.second;
        agg.episodes = static_cast<int>(members.size());
        int successes = 0;
        for (const MetricsReport* m : members) successes += m->success ? 1 : 0;
        agg.success_rate = 100.0 * successes / static_cast<double>(members.size());
        for (const std::string& name : aggregated_metric_names()) {
            std::vector<double> values;
            for (const MetricsReport* m : members)
                if (auto v = metric_value(*m, name)) values.push_back(*v);
            if (!values.empty()) agg.stats[name] = summarize(std::move(values));
        }
        out.push_back(std::move(agg));
    }
    return out;
}

}  // namespace navbench
