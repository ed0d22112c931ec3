#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "navbench/laser.hpp"
#include "navbench/planner.hpp"
#include "navbench/scenario.hpp"
#include "navbench/world_map.hpp"

namespace navbench {

enum class Outcome { Success, CollisionLimit, Timeout, PlannerError };
std::string to_string(Outcome outcome);
Outcome outcome_from_string(const std::string& s);

struct RobotFrame {
    Pose2D pose;
    Twist twist;      // actual, after acceleration clamping
    Twist commanded;  // raw planner output active during this control period
    bool collision{false};
    double clearance{0.0};
};

struct Frame {
    double t{0.0};
    std::vector<RobotFrame> robots;
    std::vector<std::pair<int, Vec2>> pedestrians;  // (id, position)
    std::vector<std::vector<double>> scan_digest;   // per robot, every k-th beam
};

struct CollisionEvent {
    double t{0.0};
    int robot{0};
    Vec2 position;
};

struct EpisodeMeta {
    int schema_version{1};
    std::string scenario_id;
    std::string planner_id;
    int episode_index{0};
    std::uint64_t seed{0};
    std::string map_ref;  // informational; the map itself is embedded
    WorldMap map;
    std::vector<RobotModel> robot_models;
    std::vector<Vec2> goals;
    std::vector<std::pair<int, double>> pedestrian_radii;
    std::vector<Disc> static_discs;
    double control_dt{0.1};
    double physics_dt{0.05};
    int scan_digest_stride{8};
};

/// One episode: meta, one frame per control tick, outcome, and the debounced
/// collision events.
struct EpisodeRecord {
    EpisodeMeta meta;
    std::vector<Frame> frames;
    Outcome outcome{Outcome::Timeout};
    std::vector<CollisionEvent> collision_events;
};

struct EpisodeParams {
    double control_dt{0.1};
    double deadline_s{0.25};
    double goal_tolerance{0.3};
    double collision_debounce_s{0.5};
    int collision_abort_limit{0};  // 0: never abort, record everything
    int scan_digest_stride{8};
    LaserScanConfig laser;
};

/// Deterministic fixed-step episode. Every physics dt the crowd steps and the
/// robots integrate their clamped commands; every control dt each live robot
/// is sensed, observed, and asked for a command, and a frame is recorded.
/// The single episode RNG is consumed in a fixed order: crowd draws each
/// physics step, then odometry corruption per robot at control ticks.
EpisodeRecord run_episode(const Scenario& scenario, const WorldMap& map,
                          const PlannerSpec& planner, std::uint64_t seed, int episode_index,
                          const EpisodeParams& params = {});

/// Debounced rising-edge extraction from recorded frames; the same rule the
/// episode loop applies online. A rising edge becomes an event when no event
/// was fired yet, or when at least debounce_s of collision-free frame time
/// accumulated since the previous event on that robot.
std::vector<CollisionEvent> extract_collision_events(std::span<const Frame> frames,
                                                     double control_dt, double debounce_s);

struct BatchConfig {
    int episodes{0};  // per (scenario, planner) cell; 0: use scenario.episodes
    int parallelism{1};
    std::uint64_t seed_base{1};
    EpisodeParams episode;
};

/// scenario x planner grid, episodes_per_cell each, episode seed =
/// seed_base + episode_index. The sink runs under a mutex, in completion
/// order; contents are independent of the parallelism degree. Planner
/// failures become planner_error records and the batch continues.
void run_batch(std::span<const Scenario> scenarios, std::span<const WorldMap> maps,
               std::span<const PlannerSpec> planners, const BatchConfig& config,
               const std::function<void(EpisodeRecord&&)>& sink);

// Record files: JSONL, line 1 meta, one line per frame, final line outcome.
std::string record_to_jsonl(const EpisodeRecord& record);
EpisodeRecord record_from_jsonl(const std::string& text);
void save_record(const EpisodeRecord& record, const std::string& path);
EpisodeRecord load_record(const std::string& path);
/// "<scenario>__<planner>__<episode>.jsonl"
std::string record_filename(const EpisodeRecord& record);

}  // namespace navbench
