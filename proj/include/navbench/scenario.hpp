#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "navbench/crowd.hpp"
#include "navbench/geometry.hpp"
#include "navbench/odometry.hpp"
#include "navbench/world_map.hpp"

namespace navbench {

struct RobotSpec {
    RobotModel model;
    Pose2D start;
    Vec2 goal;
};

/// A fully reproducible episode description. The map is either referenced by
/// path (map_ref) or carried inline.
struct Scenario {
    int schema_version{1};
    std::string name{"scenario"};
    std::string map_ref;                  // empty when the map is inline
    std::optional<WorldMap> inline_map;
    std::vector<RobotSpec> robots;
    std::vector<PedestrianState> pedestrians;
    std::uint64_t seed{0};
    double timeout{180.0};
    double dt{0.05};
    int episodes{30};
    bool map_known{true};       // false: planners receive no global map
    bool position_known{true};  // false: planners receive corrupted odometry
    OdometryNoise odometry_noise;
    SocialForceParams social_force;
};

enum class TaskModeKind {
    Scenario,
    Random,
    RandomPositionUnknown,
    RandomMapUnknown,
    RandomBothUnknown,
};

struct TaskMode {
    TaskModeKind kind{TaskModeKind::Random};
    int n_pedestrians{5};
    int n_static_obstacles{0};
};

TaskModeKind task_mode_from_string(const std::string& s);
std::string to_string(TaskModeKind kind);

/// Sample a feasible task on (a copy of) the map: start/goal separated by at
/// least 40% of the map diagonal with a certified grid path between them
/// (obstacles inflated by the robot radius), pedestrians on non-overlapping
/// free discs. Throws std::runtime_error when 1000 samples fail.
Scenario sample_task(const WorldMap& map, const TaskMode& mode, std::uint64_t seed);

/// Resolve the scenario's map: inline if present, else load map_ref
/// (relative paths are resolved against base_dir).
WorldMap scenario_map(const Scenario& scenario, const std::string& base_dir = "");

std::string scenario_to_json_string(const Scenario& scenario);
Scenario scenario_from_json_string(const std::string& text);
void save_scenario(const Scenario& scenario, const std::string& path);
Scenario load_scenario(const std::string& path);

}  // namespace navbench
