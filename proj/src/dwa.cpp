#include "navbench/dwa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "navbench/kinematics.hpp"

namespace navbench {

DynamicWindow dynamic_window(const RobotModel& model, const Twist& current, double control_dt) {
    DynamicWindow w;
    w.v_lo = std::max(current.v - model.a_lin_max * control_dt, model.v_min);
    w.v_hi = std::min(current.v + model.a_lin_max * control_dt, model.v_max);
    w.omega_lo = std::max(current.omega - model.a_ang_max * control_dt, -model.omega_max);
    w.omega_hi = std::min(current.omega + model.a_ang_max * control_dt, model.omega_max);
    return w;
}

std::vector<VelocitySample> dwa_samples(const DwaConfig& cfg, const DynamicWindow& window) {
    std::vector<VelocitySample> samples;
    samples.reserve(static_cast<std::size_t>(cfg.v_samples) * cfg.omega_samples);
    for (int i = 0; i < cfg.v_samples; ++i) {
        const double v = cfg.v_samples == 1
                             ? window.v_lo
                             : window.v_lo + (window.v_hi - window.v_lo) * i / (cfg.v_samples - 1);
        for (int k = 0; k < cfg.omega_samples; ++k) {
            const double omega =
                cfg.omega_samples == 1
                    ? window.omega_lo
                    : window.omega_lo +
                          (window.omega_hi - window.omega_lo) * k / (cfg.omega_samples - 1);
            samples.push_back({v, omega});
        }
    }
    return samples;
}

namespace {

struct Rollout {
    Pose2D end;
    double min_point_dist;  // to the nearest obstacle point over the rollout
};

Rollout roll_out(const Pose2D& start, const VelocitySample& s, double horizon, double sim_dt,
                 std::span<const Vec2> points, double cutoff) {
    Rollout r{start, std::numeric_limits<double>::infinity()};
    const Twist twist{s.v, s.omega};
    const int steps = std::max(1, static_cast<int>(std::round(horizon / sim_dt)));
    for (int i = 0; i < steps; ++i) {
        r.end = integrate_unicycle(r.end, twist, sim_dt);
        const Vec2 p = r.end.position();
        for (const Vec2& q : points) {
            const double d = distance(p, q);
            if (d < r.min_point_dist) r.min_point_dist = d;
        }
        if (r.min_point_dist < cutoff) break;  // already inadmissible
    }
    return r;
}

}  // namespace

DwaResult dwa_choose(const DwaConfig& cfg, const RobotModel& model, const Observation& obs,
                     std::span<const VelocitySample> samples) {
    const std::vector<Vec2> points = scan_to_points(obs.scan, obs.odom_pose);

    bool have_best = false;
    double best_score = -std::numeric_limits<double>::infinity();
    VelocitySample best{};
    for (const VelocitySample& s : samples) {
        const Rollout r = roll_out(obs.odom_pose, s, cfg.horizon, cfg.sim_dt, points,
                                   model.radius);
        const double surface_clearance = r.min_point_dist - model.radius;
        if (surface_clearance < 0.0) continue;
        // Braking admissibility: the sampled speed must be stoppable within
        // the clearance that remains along the rollout.
        const double braking_dist = s.v * s.v / (2.0 * model.a_lin_max);
        if (braking_dist > surface_clearance) continue;

        const double angle_to_goal = std::abs(
            normalize_angle((obs.goal - r.end.position()).angle() - r.end.theta));
        const double clearance_term =
            std::min(surface_clearance, cfg.clearance_cap) / cfg.clearance_cap;
        const double score = cfg.w_heading * (1.0 - angle_to_goal / kPi) +
                             cfg.w_clearance * clearance_term +
                             cfg.w_velocity * s.v / model.v_max;

        bool better = false;
        if (!have_best || score > best_score) {
            better = true;
        } else if (score == best_score) {
            // Total tie-break independent of enumeration order.
            const double a1 = std::abs(s.omega), a2 = std::abs(best.omega);
            if (a1 != a2) better = a1 < a2;
            else if (s.v != best.v) better = s.v < best.v;
            else better = s.omega < best.omega;
        }
        if (better) {
            have_best = true;
            best_score = score;
            best = s;
        }
    }

    if (!have_best) return {{Twist{0.0, model.omega_max / 2.0}}, true};
    return {{Twist{best.v, best.omega}}, false};
}

DwaResult dwa_compute(const DwaConfig& cfg, const RobotModel& model, const Observation& obs) {
    if (distance(obs.odom_pose.position(), obs.goal) < cfg.goal_tolerance)
        return {{Twist{0.0, 0.0}}, false};
    const DynamicWindow window = dynamic_window(model, obs.odom_twist, cfg.control_dt);
    const std::vector<VelocitySample> samples = dwa_samples(cfg, window);
    return dwa_choose(cfg, model, obs, samples);
}

void DwaPlanner::init(const nlohmann::json& config) {
    if (config.is_null()) return;
    cfg_.v_samples = config.value("v_samples", cfg_.v_samples);
    cfg_.omega_samples = config.value("omega_samples", cfg_.omega_samples);
    cfg_.horizon = config.value("horizon", cfg_.horizon);
    cfg_.sim_dt = config.value("sim_dt", cfg_.sim_dt);
    cfg_.w_heading = config.value("w_heading", cfg_.w_heading);
    cfg_.w_clearance = config.value("w_clearance", cfg_.w_clearance);
    cfg_.w_velocity = config.value("w_velocity", cfg_.w_velocity);
    cfg_.clearance_cap = config.value("clearance_cap", cfg_.clearance_cap);
    cfg_.goal_tolerance = config.value("goal_tolerance", cfg_.goal_tolerance);
    if (cfg_.v_samples < 3 || cfg_.omega_samples < 3)
        throw std::invalid_argument("dwa: v_samples and omega_samples must be >= 3");
    if (cfg_.horizon < cfg_.sim_dt)
        throw std::invalid_argument("dwa: horizon must be >= sim_dt");
}

PlannerCommand DwaPlanner::compute(const Observation& obs) {
    const DwaResult r = dwa_compute(cfg_, model_, obs);
    if (r.recovery) log_event("dwa_recovery");
    return r.command;
}

}  // namespace navbench
