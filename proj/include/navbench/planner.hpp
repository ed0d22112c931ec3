#pragma once

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "navbench/geometry.hpp"
#include "navbench/laser.hpp"
#include "navbench/world_map.hpp"

namespace navbench {

/// Everything a planner sees at one control tick; exactly what the recorder
/// records. global_map is null and reference_path empty in map-unknown modes.
struct Observation {
    double stamp{0.0};
    LaserScan scan;
    Pose2D odom_pose;   // truth, or corrupted when the position is unknown
    Twist odom_twist;
    Vec2 goal;          // world frame
    const WorldMap* global_map{nullptr};
    std::vector<Vec2> reference_path;
};

struct PlannerCommand {
    Twist twist;
};

/// Raised by a planner when its session is unrecoverable (protocol break,
/// crashed plugin); the episode ends with outcome planner_error.
struct PlannerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Planner session: init -> compute per tick -> shutdown. One instance per
/// robot per episode; instances are never shared.
class Planner {
public:
    virtual ~Planner() = default;
    virtual void init(const nlohmann::json& config) { (void)config; }
    virtual PlannerCommand compute(const Observation& obs) = 0;
    virtual void shutdown() {}

    /// True when compute() already bounds its own latency (the plugin bridge
    /// reads with a deadline); the harness then skips its post-hoc check.
    virtual bool enforces_deadline() const { return false; }

    /// Diagnostic events (recovery triggers etc.) for tests and logs.
    const std::vector<std::string>& events() const { return events_; }

protected:
    void log_event(std::string msg) { events_.push_back(std::move(msg)); }

private:
    std::vector<std::string> events_;
};

/// Rotate-then-drive baseline; ignores obstacles entirely.
class NaivePlanner : public Planner {
public:
    NaivePlanner(const RobotModel& model, double goal_tolerance = 0.3)
        : model_(model), goal_tolerance_(goal_tolerance) {}

    PlannerCommand compute(const Observation& obs) override {
        return {naive_twist(model_, obs, goal_tolerance_)};
    }

    /// The pure decision rule, shared with the wire-protocol reference plugin.
    static Twist naive_twist(const RobotModel& model, const Observation& obs,
                             double goal_tolerance);

private:
    RobotModel model_;
    double goal_tolerance_;
};

/// Scan hits as world points, using the odometry pose as the sensor frame.
std::vector<Vec2> scan_to_points(const LaserScan& scan, const Pose2D& odom_pose);

struct PlannerSpec {
    std::string id;
    std::string kind{"builtin"};          // builtin | plugin
    std::string builtin{"naive"};         // naive | dwa | apf
    nlohmann::json config;                // builtin-specific settings
    std::vector<std::string> command;     // plugin argv
};

/// Fresh planner instance for one robot in one episode. init() has been
/// called on the returned planner.
std::unique_ptr<Planner> make_planner(const PlannerSpec& spec, const RobotModel& model,
                                      double control_dt, double deadline_s);

}  // namespace navbench
