#include "navbench/planner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "navbench/apf.hpp"
#include "navbench/dwa.hpp"
#include "navbench/plugin_bridge.hpp"

namespace navbench {

Twist NaivePlanner::naive_twist(const RobotModel& model, const Observation& obs,
                                double goal_tolerance) {
    const Vec2 to_goal = obs.goal - obs.odom_pose.position();
    const double dist = to_goal.norm();
    if (dist < goal_tolerance) return {0.0, 0.0};
    const double heading_err = normalize_angle(to_goal.angle() - obs.odom_pose.theta);
    Twist cmd;
    cmd.omega = std::clamp(2.0 * heading_err, -model.omega_max, model.omega_max);
    const double align = 0.5;  // rad; drive only when roughly aligned
    if (std::abs(heading_err) < align) {
        cmd.v = std::min(model.v_max * (1.0 - std::abs(heading_err) / align), dist);
    }
    return cmd;
}

std::vector<Vec2> scan_to_points(const LaserScan& scan, const Pose2D& odom_pose) {
    // Sensor assumed at the robot origin (identity mounting).
    std::vector<Vec2> points;
    const int n = static_cast<int>(scan.ranges.size());
    if (n == 0) return points;
    const Vec2 origin = odom_pose.position();
    for (int i = 0; i < n; ++i) {
        const double r = scan.ranges[static_cast<std::size_t>(i)];
        if (r >= scan.range_max) continue;  // range_max encodes "no hit"
        const double angle =
            odom_pose.theta +
            (n == 1 ? scan.angle_min
                    : scan.angle_min + (scan.angle_max - scan.angle_min) * i / (n - 1));
        points.push_back(origin + r * unit_from_angle(angle));
    }
    return points;
}

std::unique_ptr<Planner> make_planner(const PlannerSpec& spec, const RobotModel& model,
                                      double control_dt, double deadline_s) {
    std::unique_ptr<Planner> planner;
    if (spec.kind == "plugin") {
        if (spec.command.empty())
            throw std::invalid_argument("planner '" + spec.id + "': plugin needs a command");
        planner = std::make_unique<PluginPlanner>(spec.command, model, control_dt, deadline_s);
    } else if (spec.kind == "builtin") {
        if (spec.builtin == "naive") {
            planner = std::make_unique<NaivePlanner>(model);
        } else if (spec.builtin == "dwa") {
            DwaConfig cfg;
            cfg.control_dt = control_dt;
            planner = std::make_unique<DwaPlanner>(model, cfg);
        } else if (spec.builtin == "apf") {
            ApfConfig cfg;
            cfg.control_dt = control_dt;
            planner = std::make_unique<ApfPlanner>(model, cfg);
        } else {
            throw std::invalid_argument("planner '" + spec.id + "': unknown builtin '" +
                                        spec.builtin + "'");
        }
    } else {
        throw std::invalid_argument("planner '" + spec.id + "': kind must be builtin or plugin");
    }
    planner->init(spec.config);
    return planner;
}

}  // namespace navbench
