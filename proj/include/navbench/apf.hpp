#pragma once

#include "navbench/planner.hpp"

namespace navbench {

struct ApfConfig {
    double k_att{1.0};            // attraction magnitude (capped near the goal)
    double k_rep{0.5};            // repulsion gain
    double influence_radius{1.5}; // m; scan points beyond it exert no force
    double k_heading{2.0};        // P gain steering onto the force direction
    double goal_tolerance{0.3};
    double control_dt{0.1};
    double min_force{0.15};       // below this for > 2 s -> recovery rotation
    double swirl_gain{1.0};       // tangential escape for dead-ahead blockers
    double blocking_cone{0.3};    // rad around the goal bearing
};

/// Net artificial force (attractive + repulsive) at the observed state.
/// Repulsion from scan points within the influence radius; points sitting
/// inside the cone toward the goal additionally contribute a tangential
/// component so exact head-on blockers deflect the command instead of
/// cancelling it.
Vec2 apf_force(const ApfConfig& cfg, const RobotModel& model, const Observation& obs);

/// Gradient-following baseline with local-minimum recovery.
class ApfPlanner : public Planner {
public:
    ApfPlanner(const RobotModel& model, ApfConfig cfg = {}) : model_(model), cfg_(cfg) {}

    void init(const nlohmann::json& config) override;
    PlannerCommand compute(const Observation& obs) override;

private:
    RobotModel model_;
    ApfConfig cfg_;
    double low_force_time_{0.0};
};

}  // namespace navbench
