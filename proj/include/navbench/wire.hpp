#pragma once

#include <optional>

#include "json.hpp"
#include "navbench/planner.hpp"

namespace navbench {

/// External-planner wire protocol: UTF-8, one JSON object per line,
/// '\n'-terminated, over the plugin's standard streams.
///
///   harness -> plugin  {"type":"init","config":...,"robot":{...},
///                       "control_dt":...,"goal_tolerance":...}
///   plugin  -> harness {"type":"ready"}
///   harness -> plugin  {"type":"obs","stamp":...,"pose":[x,y,theta],
///                       "twist":[v,omega],"goal":[x,y],"scan":{...},
///                       "map":{...}?,"reference_path":[[x,y],...]?}
///   plugin  -> harness {"type":"cmd","v":...,"omega":...}
///   harness -> plugin  {"type":"shutdown"}
///
/// Unknown fields are ignored by both sides.
nlohmann::json wire_init(const nlohmann::json& config, const RobotModel& model,
                         double control_dt, double goal_tolerance);
nlohmann::json wire_obs(const Observation& obs);
nlohmann::json wire_cmd(const Twist& twist);

/// Parsed observation with owned storage for the optional map. view() wires
/// the internal pointer up; keep the WireObservation alive while using it.
struct WireObservation {
    double stamp{0.0};
    LaserScan scan;
    Pose2D pose;
    Twist twist;
    Vec2 goal;
    std::optional<WorldMap> map;
    std::vector<Vec2> reference_path;

    Observation view() const {
        Observation obs;
        obs.stamp = stamp;
        obs.scan = scan;
        obs.odom_pose = pose;
        obs.odom_twist = twist;
        obs.goal = goal;
        obs.global_map = map ? &*map : nullptr;
        obs.reference_path = reference_path;
        return obs;
    }
};

WireObservation wire_parse_obs(const nlohmann::json& j);

/// Extracts and validates a cmd message; throws PlannerError on anything
/// malformed or non-finite.
Twist wire_parse_cmd(const nlohmann::json& j);

}  // namespace navbench
