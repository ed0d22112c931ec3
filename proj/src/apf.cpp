#include "navbench/apf.hpp"

#include <algorithm>
#include <cmath>

namespace navbench {

Vec2 apf_force(const ApfConfig& cfg, const RobotModel& model, const Observation& obs) {
    const Vec2 pos = obs.odom_pose.position();
    const Vec2 to_goal = obs.goal - pos;
    const double goal_dist = to_goal.norm();
    const Vec2 goal_dir = to_goal.normalized();
    Vec2 force = cfg.k_att * std::min(goal_dist, 1.0) * goal_dir;

    const double d0 = cfg.influence_radius;
    for (const Vec2& pt : scan_to_points(obs.scan, obs.odom_pose)) {
        const Vec2 away = pos - pt;
        const double d = std::max(away.norm() - model.radius, 0.05);
        if (d >= d0) continue;
        const double mag = cfg.k_rep * (1.0 / d - 1.0 / d0) / (d * d);
        force += mag * away.normalized();
        // A blocker sitting on the goal line would cancel the attraction
        // exactly; give it a tangential component instead.
        const double bearing_err = std::abs(normalize_angle((pt - pos).angle() - goal_dir.angle()));
        if (bearing_err < cfg.blocking_cone && away.norm() < goal_dist) {
            force += cfg.swirl_gain * mag * goal_dir.perp();
        }
    }
    return force;
}

void ApfPlanner::init(const nlohmann::json& config) {
    if (config.is_null()) return;
    cfg_.k_att = config.value("k_att", cfg_.k_att);
    cfg_.k_rep = config.value("k_rep", cfg_.k_rep);
    cfg_.influence_radius = config.value("influence_radius", cfg_.influence_radius);
    cfg_.k_heading = config.value("k_heading", cfg_.k_heading);
    cfg_.goal_tolerance = config.value("goal_tolerance", cfg_.goal_tolerance);
    cfg_.min_force = config.value("min_force", cfg_.min_force);
    cfg_.swirl_gain = config.value("swirl_gain", cfg_.swirl_gain);
}

PlannerCommand ApfPlanner::compute(const Observation& obs) {
    const Vec2 pos = obs.odom_pose.position();
    if (distance(pos, obs.goal) < cfg_.goal_tolerance) {
        low_force_time_ = 0.0;
        return {Twist{0.0, 0.0}};
    }

    const Vec2 force = apf_force(cfg_, model_, obs);
    if (force.norm() < cfg_.min_force) {
        low_force_time_ += cfg_.control_dt;
        if (low_force_time_ > 2.0) {
            log_event("apf_recovery");
            return {Twist{0.0, model_.omega_max / 2.0}};
        }
    } else {
        low_force_time_ = 0.0;
    }

    const double heading_err = normalize_angle(force.angle() - obs.odom_pose.theta);
    Twist cmd;
    cmd.omega = std::clamp(cfg_.k_heading * heading_err, -model_.omega_max, model_.omega_max);
    const double strength = std::min(1.0, force.norm() / cfg_.k_att);
    cmd.v = model_.v_max * std::max(0.0, std::cos(heading_err)) * strength;
    return {cmd};
}

}  // namespace navbench
