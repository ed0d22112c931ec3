#include "navbench/wire.hpp"

#include <cmath>

#include "navbench/json_io.hpp"

namespace navbench {

using nlohmann::json;

json wire_init(const json& config, const RobotModel& model, double control_dt,
               double goal_tolerance) {
    return {{"type", "init"},
            {"config", config.is_null() ? json::object() : config},
            {"robot", robot_model_to_json(model)},
            {"control_dt", control_dt},
            {"goal_tolerance", goal_tolerance}};
}

json wire_obs(const Observation& obs) {
    json j{{"type", "obs"},
           {"stamp", obs.stamp},
           {"pose", pose_to_json(obs.odom_pose)},
           {"twist", twist_to_json(obs.odom_twist)},
           {"goal", vec2_to_json(obs.goal)},
           {"scan", laser_scan_to_json(obs.scan)}};
    if (obs.global_map) j["map"] = json::parse(map_to_json_string(*obs.global_map));
    if (!obs.reference_path.empty()) {
        json path = json::array();
        for (const Vec2& p : obs.reference_path) path.push_back(vec2_to_json(p));
        j["reference_path"] = std::move(path);
    }
    return j;
}

json wire_cmd(const Twist& twist) {
    return {{"type", "cmd"}, {"v", twist.v}, {"omega", twist.omega}};
}

WireObservation wire_parse_obs(const json& j) {
    WireObservation w;
    w.stamp = j.at("stamp").get<double>();
    w.pose = pose_from_json(j.at("pose"));
    w.twist = twist_from_json(j.at("twist"));
    w.goal = vec2_from_json(j.at("goal"));
    w.scan = laser_scan_from_json(j.at("scan"));
    if (j.contains("map")) w.map = map_from_json_string(j.at("map").dump());
    if (j.contains("reference_path"))
        for (const json& p : j.at("reference_path")) w.reference_path.push_back(vec2_from_json(p));
    return w;
}

Twist wire_parse_cmd(const json& j) {
    if (!j.is_object() || j.value("type", "") != "cmd")
        throw PlannerError("wire: expected a cmd message");
    if (!j.contains("v") || !j.contains("omega") || !j.at("v").is_number() ||
        !j.at("omega").is_number())
        throw PlannerError("wire: cmd v/omega must be numbers");
    const Twist t{j.at("v").get<double>(), j.at("omega").get<double>()};
    if (!std::isfinite(t.v) || !std::isfinite(t.omega))
        throw PlannerError("wire: cmd v/omega must be finite");
    return t;
}

}  // namespace navbench
