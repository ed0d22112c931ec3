#pragma once

#include <algorithm>
#include <cmath>

#include "navbench/geometry.hpp"

namespace navbench {

/// Exact unicycle arc integration over dt. Below |omega| = 1e-9 the arc
/// degenerates to a straight step (error under 1e-9 m).
inline Pose2D integrate_unicycle(const Pose2D& pose, const Twist& twist, double dt) {
    Pose2D next;
    if (std::abs(twist.omega) < 1e-9) {
        next.x = pose.x + twist.v * std::cos(pose.theta) * dt;
        next.y = pose.y + twist.v * std::sin(pose.theta) * dt;
        next.theta = normalize_angle(pose.theta + twist.omega * dt);
    } else {
        const double theta_next = pose.theta + twist.omega * dt;
        const double k = twist.v / twist.omega;
        next.x = pose.x + k * (std::sin(theta_next) - std::sin(pose.theta));
        next.y = pose.y - k * (std::cos(theta_next) - std::cos(pose.theta));
        next.theta = normalize_angle(theta_next);
    }
    return next;
}

/// Accelerate from `current` toward `desired` under the model's acceleration
/// limits over dt, then clamp into the velocity envelope.
inline Twist clamp_twist(const RobotModel& model, const Twist& current,
                         const Twist& desired, double dt) {
    Twist out;
    out.v = std::clamp(desired.v, current.v - model.a_lin_max * dt,
                       current.v + model.a_lin_max * dt);
    out.omega = std::clamp(desired.omega, current.omega - model.a_ang_max * dt,
                           current.omega + model.a_ang_max * dt);
    out.v = std::clamp(out.v, model.v_min, model.v_max);
    out.omega = std::clamp(out.omega, -model.omega_max, model.omega_max);
    return out;
}

}  // namespace navbench
