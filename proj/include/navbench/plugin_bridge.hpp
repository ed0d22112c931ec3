#pragma once

#include <string>
#include <vector>

#include "navbench/planner.hpp"

namespace navbench {

/// Runs an external planner process and speaks the line-delimited JSON wire
/// protocol with it. A missed per-tick deadline yields a zero twist and a
/// "timeout_tick" event; the stale reply is discarded on the next tick. Any
/// malformed or non-finite reply raises PlannerError, ending the episode
/// with outcome planner_error.
class PluginPlanner : public Planner {
public:
    PluginPlanner(std::vector<std::string> command, const RobotModel& model,
                  double control_dt, double deadline_s);
    ~PluginPlanner() override;

    PluginPlanner(const PluginPlanner&) = delete;
    PluginPlanner& operator=(const PluginPlanner&) = delete;

    void init(const nlohmann::json& config) override;
    PlannerCommand compute(const Observation& obs) override;
    void shutdown() override;

    /// The bridge applies its own read deadline; the harness must not
    /// double-enforce.
    bool enforces_deadline() const override { return true; }

    int timeout_ticks() const { return timeout_ticks_; }

private:
    void spawn();
    void send_line(const std::string& line);
    // nullopt on deadline; throws PlannerError on EOF or read failure.
    bool read_line(double deadline_s, std::string& out);
    void terminate_child();

    std::vector<std::string> command_;
    RobotModel model_;
    double control_dt_;
    double deadline_s_;

    int child_pid_{-1};
    int to_child_{-1};
    int from_child_{-1};
    std::string buffer_;
    int pending_stale_{0};
    int timeout_ticks_{0};
    bool running_{false};
};

}  // namespace navbench
