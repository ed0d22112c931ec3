#pragma once

#include <span>
#include <vector>

#include "navbench/geometry.hpp"
#include "navbench/rng.hpp"
#include "navbench/world_map.hpp"

namespace navbench {

/// Helbing-style social force constants (exponential repulsion, isotropic).
struct SocialForceParams {
    double tau{0.5};                // relaxation time [s]
    double a_ped{2.0};              // pedestrian repulsion strength [m/s^2]
    double b_ped{0.3};              // pedestrian repulsion range [m]
    double a_wall{3.0};             // wall repulsion strength [m/s^2]
    double b_wall{0.2};             // wall repulsion range [m]
    double speed_cap_factor{1.3};   // max speed = factor * v0
    bool react_to_robots{false};    // opt-in: robots also repel pedestrians
};

enum class BehaviorKind { Random, Handcrafted, Graph };

struct BehaviorMode {
    BehaviorKind kind{BehaviorKind::Handcrafted};
    // Random: waypoints are resampled uniformly inside these world bounds.
    double bounds_x0{0.0}, bounds_y0{0.0}, bounds_x1{0.0}, bounds_y1{0.0};
    // Graph: undirected waypoint graph; the walk picks a random incident edge.
    std::vector<std::pair<int, int>> edges;
};

struct PedestrianState {
    int id{0};
    Vec2 position;
    Vec2 velocity;
    double radius{0.25};
    double v0{1.0};  // desired speed [m/s]
    BehaviorMode behavior;
    // Handcrafted: the fixed loop. Graph: the node set. Random: one entry,
    // the current target.
    std::vector<Vec2> waypoints;
    int current_waypoint_index{0};
};

inline constexpr double kWaypointReachDist = 0.3;

/// Total social force on `self`: goal-driving term plus exponential
/// repulsion from every other pedestrian and from the nearest occupied cell.
/// Coincident agents are separated along a deterministic hashed direction.
Vec2 social_force(const PedestrianState& self, std::span<const PedestrianState> others,
                  const WorldMap& map, const SocialForceParams& params);

/// Deterministic unit direction used when two agents coincide.
Vec2 coincident_direction(int id_self, int id_other);

/// Owns the crowd state for one episode. step() advances all pedestrians by
/// one semi-implicit Euler step with simultaneous force evaluation; RNG draws
/// happen in pedestrian index order (waypoint resampling and graph walks).
class CrowdSim {
public:
    CrowdSim(const WorldMap& map, const SocialForceParams& params,
             std::vector<PedestrianState> initial);

    /// dt must be in (0, 0.1]. `robots` repel only if params.react_to_robots.
    void step(double dt, Rng& rng, std::span<const Disc> robots = {});

    const std::vector<PedestrianState>& states() const { return states_; }
    double time() const { return time_; }

private:
    void advance_waypoint(PedestrianState& ped, Rng& rng);
    void resample_random_waypoint(PedestrianState& ped, Rng& rng);

    const WorldMap* map_;
    SocialForceParams params_;
    std::vector<PedestrianState> states_;
    double time_{0.0};

    // Stuck detection (Random mode): resample if displacement over 3 s < 0.1 m.
    struct Anchor {
        Vec2 position;
        double t{0.0};
    };
    std::vector<Anchor> anchors_;
};

}  // namespace navbench
