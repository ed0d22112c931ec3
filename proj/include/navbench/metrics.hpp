#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "navbench/episode.hpp"

namespace navbench {

/// Per-episode (per-robot) metric values. Fields needing at least three
/// frames (the derivative set) are absent on shorter records. time_to_goal is
/// present only when the outcome is success.
struct MetricsReport {
    std::string scenario_id;
    std::string planner_id;
    int episode_index{0};
    int robot_index{0};
    std::string outcome;

    bool success{false};  // outcome == success AND collisions < 2
    int collisions{0};
    std::optional<double> time_to_goal;        // s
    double path_length{0.0};                   // m
    std::optional<double> velocity_avg;        // m/s, mean |v|
    std::optional<double> acceleration_avg;    // m/s^2, mean |d|v|/dt|
    std::optional<double> jerk_avg;            // m/s^3, mean |d^2|v|/dt^2|
    std::optional<double> curvature_avg;       // 1/m, Menger over triplets
    std::optional<double> curvature_max;
    std::optional<double> curvature_min;
    std::optional<double> curvature_normalized;  // total turning, dimensionless
    std::optional<double> angle_over_length;     // rad/m
    std::optional<double> roughness;             // mean ((d^2 theta)/dt^2)^2
    std::optional<double> clearing_dist_avg;     // m
    std::optional<double> clearing_dist_max;
    std::optional<double> clearing_dist_min;
    std::optional<double> clearing_dist_normalized;  // avg / robot radius
};

/// Formula identifiers embedded in every metrics output, so consumers can
/// tell exactly which definition produced each number.
const std::map<std::string, std::string>& metric_formulas();

/// Menger curvature of three points; 0 for collinear or near-degenerate
/// (any pairwise step below 1e-6 m) triplets.
double menger_curvature(const Vec2& a, const Vec2& b, const Vec2& c);

/// Throws std::invalid_argument on a record without frames.
MetricsReport compute_metrics(const EpisodeRecord& record, int robot_index = 0);

/// One report per robot.
std::vector<MetricsReport> compute_all_metrics(const EpisodeRecord& record);

struct StatSummary {
    double mean{0.0};
    double stddev{0.0};  // population
    double median{0.0};
    double min{0.0};
    double max{0.0};
    int count{0};
};

struct AggregateReport {
    std::string scenario_id;
    std::string planner_id;
    int episodes{0};
    double success_rate{0.0};  // percent
    std::map<std::string, StatSummary> stats;  // by metric name, present values only
};

/// Names of the scalar metrics aggregated per (scenario, planner) group.
const std::vector<std::string>& aggregated_metric_names();

/// Groups reports by (scenario, planner); throws on empty input.
/// time_to_goal aggregates over successful-outcome episodes only.
std::vector<AggregateReport> aggregate(std::span<const MetricsReport> reports);

/// Value of a named scalar metric, when present.
std::optional<double> metric_value(const MetricsReport& report, const std::string& name);

}  // namespace navbench
