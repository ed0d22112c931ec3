#pragma once

#include <span>

#include "navbench/planner.hpp"

namespace navbench {

struct DwaConfig {
    int v_samples{7};
    int omega_samples{15};
    double horizon{1.5};          // rollout length [s]
    double sim_dt{0.1};           // rollout step [s]
    double w_heading{1.0};
    double w_clearance{1.0};
    double w_velocity{0.5};
    double clearance_cap{1.0};    // m
    double control_dt{0.1};       // window = one control period of accel
    double goal_tolerance{0.3};   // m
};

struct VelocitySample {
    double v{0.0};
    double omega{0.0};
};

/// The dynamic window [v +- a_lin*dt] x [omega +- a_ang*dt] intersected with
/// the model's velocity bounds.
struct DynamicWindow {
    double v_lo, v_hi, omega_lo, omega_hi;
};
DynamicWindow dynamic_window(const RobotModel& model, const Twist& current, double control_dt);

/// Canonical sample grid: v-major, omega-minor, both endpoint-inclusive.
std::vector<VelocitySample> dwa_samples(const DwaConfig& cfg, const DynamicWindow& window);

struct DwaResult {
    PlannerCommand command;
    bool recovery{false};  // all samples inadmissible
};

/// Scores the given samples against the observation and returns the argmax.
/// The tie-break is a total order on (score desc, |omega| asc, v asc, omega
/// asc), so permuting the sample list never changes the result.
DwaResult dwa_choose(const DwaConfig& cfg, const RobotModel& model, const Observation& obs,
                     std::span<const VelocitySample> samples);

/// Full DWA step: build the window, sample it, roll each sample out against
/// scan-derived obstacle points, drop inadmissible ones (footprint contact or
/// unable to brake within the remaining clearance), maximize
///   w_heading*(1-|angle_to_goal|/pi) + w_clearance*min(c,cap)/cap + w_velocity*v/v_max.
DwaResult dwa_compute(const DwaConfig& cfg, const RobotModel& model, const Observation& obs);

class DwaPlanner : public Planner {
public:
    DwaPlanner(const RobotModel& model, DwaConfig cfg = {}) : model_(model), cfg_(cfg) {}

    void init(const nlohmann::json& config) override;
    PlannerCommand compute(const Observation& obs) override;

private:
    RobotModel model_;
    DwaConfig cfg_;
};

}  // namespace navbench
