#include "navbench/crowd.hpp"

#include <cmath>
#include <stdexcept>

#include "navbench/clearance.hpp"

namespace navbench {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Vec2 repulsion(const Vec2& to_self, double surface_gap, double strength, double range,
               const Vec2& fallback_dir) {
    const double d = to_self.norm();
    const Vec2 n = d < 1e-9 ? fallback_dir : to_self * (1.0 / d);
    return strength * std::exp(surface_gap / range) * n;
}

}  // namespace

Vec2 coincident_direction(int id_self, int id_other) {
    const std::uint64_t h = splitmix64(
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(id_self)) << 32) |
        static_cast<std::uint64_t>(static_cast<std::uint32_t>(id_other)));
    const double angle = static_cast<double>(h >> 11) * 0x1.0p-53 * 2.0 * kPi;
    return unit_from_angle(angle);
}

Vec2 social_force(const PedestrianState& self, std::span<const PedestrianState> others,
                  const WorldMap& map, const SocialForceParams& params) {
    // Driving term: relax toward v0 in the direction of the current waypoint.
    Vec2 desired{0.0, 0.0};
    if (!self.waypoints.empty()) {
        const Vec2 target = self.waypoints[static_cast<std::size_t>(self.current_waypoint_index)];
        desired = self.v0 * (target - self.position).normalized();
    }
    Vec2 force = (desired - self.velocity) * (1.0 / params.tau);

    for (const PedestrianState& other : others) {
        if (other.id == self.id) continue;  // full crowd may be passed in
        const Vec2 to_self = self.position - other.position;
        force += repulsion(to_self, self.radius + other.radius - to_self.norm(), params.a_ped,
                           params.b_ped, coincident_direction(self.id, other.id));
    }

    const NearestHit wall = nearest_occupied(map, self.position);
    Vec2 away = self.position - wall.closest;
    if (wall.distance < 0.0) away = wall.closest - self.position;  // inside: escape outward
    if (away.norm() < 1e-12) away = {1.0, 0.0};
    force += params.a_wall * std::exp((self.radius - wall.distance) / params.b_wall) *
             away.normalized();
    return force;
}

CrowdSim::CrowdSim(const WorldMap& map, const SocialForceParams& params,
                   std::vector<PedestrianState> initial)
    : map_(&map), params_(params), states_(std::move(initial)) {
    for (const PedestrianState& ped : states_) {
        if (!ped.waypoints.empty() &&
            (ped.current_waypoint_index < 0 ||
             ped.current_waypoint_index >= static_cast<int>(ped.waypoints.size())))
            throw std::invalid_argument("CrowdSim: waypoint index out of range");
        anchors_.push_back({ped.position, 0.0});
    }
}

void CrowdSim::step(double dt, Rng& rng, std::span<const Disc> robots) {
    if (!(dt > 0.0 && dt <= 0.1))
        throw std::invalid_argument("CrowdSim::step: dt must be in (0, 0.1]");

    // Simultaneous force evaluation from the pre-step state.
    std::vector<Vec2> forces(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) {
        Vec2 f = social_force(states_[i], states_, *map_, params_);
        if (params_.react_to_robots) {
            for (std::size_t k = 0; k < robots.size(); ++k) {
                const Vec2 to_self = states_[i].position - robots[k].center;
                f += repulsion(to_self, states_[i].radius + robots[k].radius - to_self.norm(),
                               params_.a_ped, params_.b_ped,
                               coincident_direction(states_[i].id, -1 - static_cast<int>(k)));
            }
        }
        forces[i] = f;
    }

    time_ += dt;
    for (std::size_t i = 0; i < states_.size(); ++i) {
        PedestrianState& ped = states_[i];
        ped.velocity += forces[i] * dt;
        const double cap = params_.speed_cap_factor * ped.v0;
        const double speed = ped.velocity.norm();
        if (speed > cap && speed > 0.0) ped.velocity = ped.velocity * (cap / speed);

        // Axis-separated move so pedestrians slide along walls instead of
        // stepping into occupied cells.
        auto free_at = [&](const Vec2& p) {
            if (!map_->contains(p)) return false;
            int cx, cy;
            map_->cell_of(p, cx, cy);
            return !map_->occupied(cx, cy);
        };
        const Vec2 delta = ped.velocity * dt;
        if (free_at(ped.position + delta)) {
            ped.position += delta;
        } else if (free_at(ped.position + Vec2{delta.x, 0.0})) {
            ped.position += Vec2{delta.x, 0.0};
        } else if (free_at(ped.position + Vec2{0.0, delta.y})) {
            ped.position += Vec2{0.0, delta.y};
        }

        if (!ped.waypoints.empty()) {
            const Vec2 target =
                ped.waypoints[static_cast<std::size_t>(ped.current_waypoint_index)];
            if (distance(ped.position, target) < kWaypointReachDist) advance_waypoint(ped, rng);
        }

        if (ped.behavior.kind == BehaviorKind::Random) {
            Anchor& anchor = anchors_[i];
            if (time_ - anchor.t >= 3.0) {
                if (distance(ped.position, anchor.position) < 0.1)
                    resample_random_waypoint(ped, rng);
                anchor = {ped.position, time_};
            }
        }
    }
}

void CrowdSim::advance_waypoint(PedestrianState& ped, Rng& rng) {
    switch (ped.behavior.kind) {
        case BehaviorKind::Random:
            resample_random_waypoint(ped, rng);
            break;
        case BehaviorKind::Handcrafted:
            ped.current_waypoint_index =
                (ped.current_waypoint_index + 1) % static_cast<int>(ped.waypoints.size());
            break;
        case BehaviorKind::Graph: {
            std::vector<int> neighbors;
            for (const auto& [a, b] : ped.behavior.edges) {
                if (a == ped.current_waypoint_index) neighbors.push_back(b);
                else if (b == ped.current_waypoint_index) neighbors.push_back(a);
            }
            if (!neighbors.empty())
                ped.current_waypoint_index =
                    static_cast<int>(neighbors[rng.uniform_int(neighbors.size())]);
            break;
        }
    }
}

void CrowdSim::resample_random_waypoint(PedestrianState& ped, Rng& rng) {
    const BehaviorMode& b = ped.behavior;
    if (ped.waypoints.empty()) ped.waypoints.resize(1);
    ped.current_waypoint_index = 0;
    for (int attempt = 0; attempt < 100; ++attempt) {
        const Vec2 candidate{rng.uniform(b.bounds_x0, b.bounds_x1),
                             rng.uniform(b.bounds_y0, b.bounds_y1)};
        if (!map_->contains(candidate)) continue;
        int cx, cy;
        map_->cell_of(candidate, cx, cy);
        if (map_->occupied(cx, cy)) continue;
        ped.waypoints[0] = candidate;
        return;
    }
    // Keep the old waypoint if the bounds are hopeless.
}

}  // namespace navbench
