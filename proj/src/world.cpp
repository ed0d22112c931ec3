#include "navbench/world.hpp"

#include <algorithm>
#include <stdexcept>

namespace navbench {

bool World::cell_free(const Vec2& p) const {
    if (!map_.contains(p)) return false;
    int cx, cy;
    map_.cell_of(p, cx, cy);
    return !map_.occupied(cx, cy);
}

EntityHandle World::spawn(const EntitySpec& spec) {
    EntityHandle handle;
    handle.id = next_id_;
    if (const auto* robot = std::get_if<RobotSpec>(&spec)) {
        if (!cell_free(robot->start.position()))
            throw std::invalid_argument("spawn: robot start in occupied space");
        handle.kind = EntityKind::Robot;
        robots_.push_back({handle.id, *robot, robot->start, Twist{}});
    } else if (const auto* ped = std::get_if<PedestrianState>(&spec)) {
        if (!cell_free(ped->position))
            throw std::invalid_argument("spawn: pedestrian position in occupied space");
        handle.kind = EntityKind::Pedestrian;
        PedestrianState state = *ped;
        state.id = static_cast<int>(handle.id);
        pedestrians_.push_back(std::move(state));
    } else {
        const Disc& disc = std::get<Disc>(spec);
        if (!cell_free(disc.center))
            throw std::invalid_argument("spawn: obstacle center in occupied space");
        handle.kind = EntityKind::StaticObstacle;
        obstacles_.emplace_back(handle.id, disc);
    }
    ++next_id_;
    return handle;
}

void World::delete_entity(const EntityHandle& handle) {
    switch (handle.kind) {
        case EntityKind::Robot: {
            auto it = std::find_if(robots_.begin(), robots_.end(),
                                   [&](const RobotInstance& r) { return r.id == handle.id; });
            if (it == robots_.end()) throw std::invalid_argument("delete_entity: unknown handle");
            robots_.erase(it);
            return;
        }
        case EntityKind::Pedestrian: {
            auto it = std::find_if(pedestrians_.begin(), pedestrians_.end(),
                                   [&](const PedestrianState& p) {
                                       return p.id == static_cast<int>(handle.id);
                                   });
            if (it == pedestrians_.end())
                throw std::invalid_argument("delete_entity: unknown handle");
            pedestrians_.erase(it);
            return;
        }
        case EntityKind::StaticObstacle: {
            auto it = std::find_if(obstacles_.begin(), obstacles_.end(),
                                   [&](const auto& o) { return o.first == handle.id; });
            if (it == obstacles_.end()) throw std::invalid_argument("delete_entity: unknown handle");
            obstacles_.erase(it);
            return;
        }
    }
}

void World::move_entity(const EntityHandle& handle, const Pose2D& pose) {
    if (!cell_free(pose.position()))
        throw std::invalid_argument("move_entity: target cell is occupied");
    switch (handle.kind) {
        case EntityKind::Robot:
            for (RobotInstance& r : robots_) {
                if (r.id == handle.id) {
                    r.pose = pose;
                    return;
                }
            }
            break;
        case EntityKind::Pedestrian:
            for (PedestrianState& p : pedestrians_) {
                if (p.id == static_cast<int>(handle.id)) {
                    p.position = pose.position();
                    return;
                }
            }
            break;
        case EntityKind::StaticObstacle:
            for (auto& [id, disc] : obstacles_) {
                if (id == handle.id) {
                    disc.center = pose.position();
                    return;
                }
            }
            break;
    }
    throw std::invalid_argument("move_entity: unknown handle");
}

void World::reset() {
    robots_.clear();
    pedestrians_.clear();
    obstacles_.clear();
}

std::size_t World::entity_count() const {
    return robots_.size() + pedestrians_.size() + obstacles_.size();
}

std::size_t World::count(EntityKind kind) const {
    switch (kind) {
        case EntityKind::Robot: return robots_.size();
        case EntityKind::Pedestrian: return pedestrians_.size();
        case EntityKind::StaticObstacle: return obstacles_.size();
    }
    return 0;
}

std::vector<Disc> World::agent_discs(std::uint64_t exclude_robot_id) const {
    std::vector<Disc> discs;
    discs.reserve(pedestrians_.size() + obstacles_.size() + robots_.size());
    for (const PedestrianState& p : pedestrians_) discs.push_back({p.position, p.radius});
    for (const auto& [id, disc] : obstacles_) discs.push_back(disc);
    for (const RobotInstance& r : robots_) {
        if (r.id == exclude_robot_id) continue;
        discs.push_back({r.pose.position(), r.spec.model.radius});
    }
    return discs;
}

}  // namespace navbench
