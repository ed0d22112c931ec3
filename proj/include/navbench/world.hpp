#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "navbench/crowd.hpp"
#include "navbench/geometry.hpp"
#include "navbench/scenario.hpp"
#include "navbench/world_map.hpp"

namespace navbench {

enum class EntityKind { Robot, Pedestrian, StaticObstacle };

struct EntityHandle {
    std::uint64_t id{0};
    EntityKind kind{EntityKind::Robot};
    bool operator==(const EntityHandle& o) const { return id == o.id && kind == o.kind; }
};

/// What a spawn call accepts: a robot (model + start + goal), a pedestrian
/// spec, or a static disc obstacle.
using EntitySpec = std::variant<RobotSpec, PedestrianState, Disc>;

struct RobotInstance {
    std::uint64_t id{0};
    RobotSpec spec;
    Pose2D pose;
    Twist twist;
};

/// The simulator-adapter surface: a static map plus dynamic entities mutated
/// through exactly four calls (spawn / delete / move / reset). Alternative
/// world backends implement this same contract.
class World {
public:
    explicit World(WorldMap map) : map_(std::move(map)) {}

    const WorldMap& map() const { return map_; }

    /// Throws std::invalid_argument when the spawn pose lies in occupied space.
    EntityHandle spawn(const EntitySpec& spec);
    /// Throws std::invalid_argument for an unknown handle.
    void delete_entity(const EntityHandle& handle);
    /// Repositions an entity; throws and leaves the world unchanged when the
    /// target cell is occupied or the handle is unknown.
    void move_entity(const EntityHandle& handle, const Pose2D& pose);
    /// Removes every dynamic entity; the static map is untouched by design.
    void reset();

    std::size_t entity_count() const;
    std::size_t count(EntityKind kind) const;

    std::vector<RobotInstance>& robots() { return robots_; }
    const std::vector<RobotInstance>& robots() const { return robots_; }
    std::vector<PedestrianState>& pedestrians() { return pedestrians_; }
    const std::vector<PedestrianState>& pedestrians() const { return pedestrians_; }
    const std::vector<std::pair<std::uint64_t, Disc>>& obstacles() const { return obstacles_; }

    /// Discs every other entity must avoid, excluding the given robot.
    std::vector<Disc> agent_discs(std::uint64_t exclude_robot_id) const;

private:
    bool cell_free(const Vec2& p) const;

    WorldMap map_;
    std::uint64_t next_id_{1};
    std::vector<RobotInstance> robots_;
    std::vector<PedestrianState> pedestrians_;           // ids are handle ids
    std::vector<std::pair<std::uint64_t, Disc>> obstacles_;
};

}  // namespace navbench
