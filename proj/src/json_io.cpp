#include "navbench/json_io.hpp"

namespace navbench {

using nlohmann::json;

json vec2_to_json(const Vec2& v) { return json::array({v.x, v.y}); }

Vec2 vec2_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json pose_to_json(const Pose2D& p) { return json::array({p.x, p.y, p.theta}); }

Pose2D pose_from_json(const json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

json twist_to_json(const Twist& t) { return json::array({t.v, t.omega}); }

Twist twist_from_json(const json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json robot_model_to_json(const RobotModel& m) {
    return {{"name", m.name},          {"radius", m.radius},
            {"v_max", m.v_max},        {"v_min", m.v_min},
            {"omega_max", m.omega_max}, {"a_lin_max", m.a_lin_max},
            {"a_ang_max", m.a_ang_max}};
}

RobotModel robot_model_from_json(const json& j) {
    RobotModel m;
    m.name = j.at("name").get<std::string>();
    m.radius = j.at("radius").get<double>();
    m.v_max = j.at("v_max").get<double>();
    m.v_min = j.at("v_min").get<double>();
    m.omega_max = j.at("omega_max").get<double>();
    m.a_lin_max = j.at("a_lin_max").get<double>();
    m.a_ang_max = j.at("a_ang_max").get<double>();
    if (!(m.radius > 0.0) || m.v_min > 0.0 || m.v_max < 0.0)
        throw std::invalid_argument("robot model: invalid limits");
    return m;
}

namespace {

json behavior_to_json(const BehaviorMode& b) {
    switch (b.kind) {
        case BehaviorKind::Random:
            return {{"kind", "random"},
                    {"bounds", json::array({b.bounds_x0, b.bounds_y0, b.bounds_x1, b.bounds_y1})}};
        case BehaviorKind::Handcrafted:
            return {{"kind", "handcrafted"}};
        case BehaviorKind::Graph: {
            json edges = json::array();
            for (const auto& [a, c] : b.edges) edges.push_back(json::array({a, c}));
            return {{"kind", "graph"}, {"edges", edges}};
        }
    }
    return {};
}

BehaviorMode behavior_from_json(const json& j) {
    BehaviorMode b;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "random") {
        b.kind = BehaviorKind::Random;
        const json& bounds = j.at("bounds");
        b.bounds_x0 = bounds.at(0).get<double>();
        b.bounds_y0 = bounds.at(1).get<double>();
        b.bounds_x1 = bounds.at(2).get<double>();
        b.bounds_y1 = bounds.at(3).get<double>();
    } else if (kind == "handcrafted") {
        b.kind = BehaviorKind::Handcrafted;
    } else if (kind == "graph") {
        b.kind = BehaviorKind::Graph;
        for (const json& e : j.at("edges"))
            b.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    } else {
        throw std::invalid_argument("behavior: unknown kind '" + kind + "'");
    }
    return b;
}

}  // namespace

json pedestrian_to_json(const PedestrianState& p) {
    json waypoints = json::array();
    for (const Vec2& w : p.waypoints) waypoints.push_back(vec2_to_json(w));
    return {{"id", p.id},
            {"position", vec2_to_json(p.position)},
            {"velocity", vec2_to_json(p.velocity)},
            {"radius", p.radius},
            {"v0", p.v0},
            {"behavior", behavior_to_json(p.behavior)},
            {"waypoints", waypoints},
            {"waypoint_index", p.current_waypoint_index}};
}

PedestrianState pedestrian_from_json(const json& j) {
    PedestrianState p;
    p.id = j.at("id").get<int>();
    p.position = vec2_from_json(j.at("position"));
    p.velocity = vec2_from_json(j.at("velocity"));
    p.radius = j.at("radius").get<double>();
    p.v0 = j.at("v0").get<double>();
    p.behavior = behavior_from_json(j.at("behavior"));
    for (const json& w : j.at("waypoints")) p.waypoints.push_back(vec2_from_json(w));
    p.current_waypoint_index = j.at("waypoint_index").get<int>();
    if (!(p.radius > 0.0) || p.v0 < 0.0)
        throw std::invalid_argument("pedestrian: radius must be > 0 and v0 >= 0");
    if (p.behavior.kind == BehaviorKind::Handcrafted && p.waypoints.empty())
        throw std::invalid_argument("pedestrian: handcrafted behavior needs >= 1 waypoint");
    return p;
}

json odometry_noise_to_json(const OdometryNoise& n) {
    return {{"enabled", n.enabled},
            {"sigma_xy", n.sigma_xy},
            {"sigma_theta", n.sigma_theta},
            {"drift_per_meter", n.drift_per_meter}};
}

OdometryNoise odometry_noise_from_json(const json& j) {
    OdometryNoise n;
    n.enabled = j.at("enabled").get<bool>();
    n.sigma_xy = j.at("sigma_xy").get<double>();
    n.sigma_theta = j.at("sigma_theta").get<double>();
    n.drift_per_meter = j.at("drift_per_meter").get<double>();
    if (n.sigma_xy < 0.0 || n.sigma_theta < 0.0)
        throw std::invalid_argument("odometry noise: sigmas must be >= 0");
    return n;
}

json social_force_params_to_json(const SocialForceParams& p) {
    return {{"tau", p.tau},
            {"a_ped", p.a_ped},
            {"b_ped", p.b_ped},
            {"a_wall", p.a_wall},
            {"b_wall", p.b_wall},
            {"speed_cap_factor", p.speed_cap_factor},
            {"react_to_robots", p.react_to_robots}};
}

SocialForceParams social_force_params_from_json(const json& j) {
    SocialForceParams p;
    p.tau = j.at("tau").get<double>();
    p.a_ped = j.at("a_ped").get<double>();
    p.b_ped = j.at("b_ped").get<double>();
    p.a_wall = j.at("a_wall").get<double>();
    p.b_wall = j.at("b_wall").get<double>();
    p.speed_cap_factor = j.at("speed_cap_factor").get<double>();
    p.react_to_robots = j.value("react_to_robots", false);
    if (p.tau <= 0.0 || p.a_ped <= 0.0 || p.b_ped <= 0.0 || p.a_wall <= 0.0 ||
        p.b_wall <= 0.0 || p.speed_cap_factor <= 0.0)
        throw std::invalid_argument("social force params must be positive");
    return p;
}

json laser_scan_to_json(const LaserScan& scan) {
    return {{"stamp", scan.stamp},
            {"angle_min", scan.angle_min},
            {"angle_max", scan.angle_max},
            {"range_max", scan.range_max},
            {"ranges", scan.ranges}};
}

LaserScan laser_scan_from_json(const json& j) {
    LaserScan scan;
    scan.stamp = j.at("stamp").get<double>();
    scan.angle_min = j.at("angle_min").get<double>();
    scan.angle_max = j.at("angle_max").get<double>();
    scan.range_max = j.at("range_max").get<double>();
    scan.ranges = j.at("ranges").get<std::vector<double>>();
    return scan;
}

}  // namespace navbench
