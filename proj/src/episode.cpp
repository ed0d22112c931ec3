#include "navbench/episode.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "navbench/clearance.hpp"
#include "navbench/crowd.hpp"
#include "navbench/kinematics.hpp"
#include "navbench/odometry.hpp"
#include "navbench/pathfind.hpp"
#include "navbench/rng.hpp"
#include "navbench/world.hpp"

namespace navbench {

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Success: return "success";
        case Outcome::CollisionLimit: return "collision_limit";
        case Outcome::Timeout: return "timeout";
        case Outcome::PlannerError: return "planner_error";
    }
    return "?";
}

Outcome outcome_from_string(const std::string& s) {
    if (s == "success") return Outcome::Success;
    if (s == "collision_limit") return Outcome::CollisionLimit;
    if (s == "timeout") return Outcome::Timeout;
    if (s == "planner_error") return Outcome::PlannerError;
    throw std::invalid_argument("unknown outcome '" + s + "'");
}

std::vector<CollisionEvent> extract_collision_events(std::span<const Frame> frames,
                                                     double control_dt, double debounce_s) {
    std::vector<CollisionEvent> events;
    if (frames.empty()) return events;
    const std::size_t n_robots = frames.front().robots.size();
    std::vector<bool> prev_flag(n_robots, false);
    std::vector<bool> has_event(n_robots, false);
    std::vector<double> free_accum(n_robots, 0.0);
    for (const Frame& frame : frames) {
        for (std::size_t r = 0; r < n_robots; ++r) {
            const bool flag = frame.robots[r].collision;
            if (flag && !prev_flag[r] &&
                (!has_event[r] || free_accum[r] >= debounce_s - 1e-9)) {
                events.push_back({frame.t, static_cast<int>(r),
                                  frame.robots[r].pose.position()});
                has_event[r] = true;
                free_accum[r] = 0.0;
            }
            if (!flag) free_accum[r] += control_dt;
            prev_flag[r] = flag;
        }
    }
    return events;
}

namespace {

double wall_now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

OdometryNoise effective_noise(const Scenario& scenario) {
    OdometryNoise noise = scenario.odometry_noise;
    if (!scenario.position_known && !noise.enabled) {
        noise = {true, 0.03, 0.01, 0.01};
    }
    return noise;
}

std::vector<double> digest(const LaserScan& scan, int stride) {
    std::vector<double> out;
    if (stride < 1) stride = 1;
    out.reserve(scan.ranges.size() / static_cast<std::size_t>(stride) + 1);
    for (std::size_t i = 0; i < scan.ranges.size(); i += static_cast<std::size_t>(stride))
        out.push_back(scan.ranges[i]);
    return out;
}

}  // namespace

EpisodeRecord run_episode(const Scenario& scenario, const WorldMap& map,
                          const PlannerSpec& planner_spec, std::uint64_t seed,
                          int episode_index, const EpisodeParams& params) {
    if (scenario.robots.empty())
        throw std::invalid_argument("run_episode: scenario has no robots");
    const double physics_dt = scenario.dt;
    if (!(physics_dt > 0.0 && physics_dt <= 0.1))
        throw std::invalid_argument("run_episode: physics dt must be in (0, 0.1]");
    const int steps_per_control =
        static_cast<int>(std::round(params.control_dt / physics_dt));
    if (steps_per_control < 1 ||
        std::abs(steps_per_control * physics_dt - params.control_dt) > 1e-9)
        throw std::invalid_argument(
            "run_episode: control_dt must be an integer multiple of physics dt");

    // Spawning through the adapter validates every start pose.
    World world(map);
    for (const RobotSpec& r : scenario.robots) world.spawn(r);
    for (const PedestrianState& p : scenario.pedestrians) world.spawn(p);

    const std::size_t n_robots = world.robots().size();

    EpisodeRecord record;
    record.meta.scenario_id = scenario.name;
    record.meta.planner_id = planner_spec.id;
    record.meta.episode_index = episode_index;
    record.meta.seed = seed;
    record.meta.map_ref = scenario.map_ref.empty() ? "inline" : scenario.map_ref;
    record.meta.map = map;
    for (const RobotInstance& r : world.robots()) {
        record.meta.robot_models.push_back(r.spec.model);
        record.meta.goals.push_back(r.spec.goal);
    }
    for (const PedestrianState& p : world.pedestrians())
        record.meta.pedestrian_radii.emplace_back(p.id, p.radius);
    for (const auto& [id, disc] : world.obstacles()) record.meta.static_discs.push_back(disc);
    record.meta.control_dt = params.control_dt;
    record.meta.physics_dt = physics_dt;
    record.meta.scan_digest_stride = params.scan_digest_stride;

    Rng rng(seed);
    CrowdSim crowd(map, scenario.social_force, world.pedestrians());

    std::vector<OdometryModel> odometry;
    const OdometryNoise noise = effective_noise(scenario);
    for (std::size_t r = 0; r < n_robots; ++r) odometry.emplace_back(noise);

    // Reference path on the true map; withheld (like the map) when unknown.
    std::vector<std::vector<Vec2>> reference_paths(n_robots);
    if (scenario.map_known) {
        for (std::size_t r = 0; r < n_robots; ++r) {
            const RobotInstance& robot = world.robots()[r];
            try {
                if (auto path = path_exists(map, robot.pose.position(), robot.spec.goal,
                                            robot.spec.model.radius)) {
                    reference_paths[r] = path_to_world(map, *path);
                }
            } catch (const std::invalid_argument&) {
                // Endpoint inside inflation: no reference path.
            }
        }
    }

    std::vector<std::unique_ptr<Planner>> planners;
    auto fail = [&](const std::string& why) {
        std::fprintf(stderr, "navbench: %s/%s episode %d -> planner_error: %s\n",
                     scenario.name.c_str(), planner_spec.id.c_str(), episode_index,
                     why.c_str());
        record.outcome = Outcome::PlannerError;
        for (auto& p : planners) {
            if (!p) continue;
            try {
                p->shutdown();
            } catch (...) {
            }
        }
        record.collision_events =
            extract_collision_events(record.frames, params.control_dt,
                                     params.collision_debounce_s);
        return record;
    };

    try {
        for (std::size_t r = 0; r < n_robots; ++r) {
            planners.push_back(make_planner(planner_spec, world.robots()[r].spec.model,
                                            params.control_dt, params.deadline_s));
        }
    } catch (const std::exception& e) {
        return fail(e.what());
    }

    std::vector<Twist> commanded(n_robots);
    std::vector<LaserScan> last_scans(n_robots);
    std::vector<bool> done(n_robots, false);
    std::vector<bool> prev_flag(n_robots, false);
    std::vector<bool> has_event(n_robots, false);
    std::vector<double> free_accum(n_robots, 0.0);

    long tick = 0;
    while (true) {
        const double t = tick * physics_dt;
        if (tick % steps_per_control == 0) {
            // Control tick: sense, observe, plan (robot index order).
            for (std::size_t r = 0; r < n_robots; ++r) {
                if (done[r]) {
                    commanded[r] = Twist{};
                    continue;
                }
                RobotInstance& robot = world.robots()[r];
                const std::vector<Disc> agents = world.agent_discs(robot.id);
                Observation obs;
                obs.stamp = t;
                obs.scan = raycast(map, agents, robot.pose, params.laser, t);
                last_scans[r] = obs.scan;
                obs.odom_pose = odometry[r].corrupt(robot.pose, rng);
                obs.odom_twist = robot.twist;
                obs.goal = robot.spec.goal;
                obs.global_map = scenario.map_known ? &map : nullptr;
                obs.reference_path = reference_paths[r];

                const double t0 = wall_now_s();
                PlannerCommand cmd;
                try {
                    cmd = planners[r]->compute(obs);
                } catch (const std::exception& e) {
                    return fail(e.what());
                }
                if (!std::isfinite(cmd.twist.v) || !std::isfinite(cmd.twist.omega))
                    return fail("non-finite command from planner");
                if (!planners[r]->enforces_deadline() &&
                    wall_now_s() - t0 > params.deadline_s) {
                    std::fprintf(stderr, "navbench: %s/%s t=%.1f timeout tick\n",
                                 scenario.name.c_str(), planner_spec.id.c_str(), t);
                    cmd.twist = Twist{};  // substitute zero for the late command
                }
                commanded[r] = cmd.twist;
            }
        }

        // Physics step: crowd first, then robots, all from the same tick state.
        std::vector<Disc> robot_discs;
        robot_discs.reserve(n_robots);
        for (const RobotInstance& robot : world.robots())
            robot_discs.push_back({robot.pose.position(), robot.spec.model.radius});
        crowd.step(physics_dt, rng, robot_discs);
        world.pedestrians() = crowd.states();

        for (std::size_t r = 0; r < n_robots; ++r) {
            RobotInstance& robot = world.robots()[r];
            const Twist desired = done[r] ? Twist{} : commanded[r];
            robot.twist = clamp_twist(robot.spec.model, robot.twist, desired, physics_dt);
            robot.pose = integrate_unicycle(robot.pose, robot.twist, physics_dt);
        }
        ++tick;

        if (tick % steps_per_control != 0) continue;

        // Frame boundary.
        const double frame_t = (tick / steps_per_control) * params.control_dt;
        Frame frame;
        frame.t = frame_t;
        bool all_done = true;
        for (std::size_t r = 0; r < n_robots; ++r) {
            RobotInstance& robot = world.robots()[r];
            const std::vector<Disc> agents = world.agent_discs(robot.id);
            RobotFrame rf;
            rf.pose = robot.pose;
            rf.twist = robot.twist;
            rf.commanded = commanded[r];
            rf.clearance = clearance(map, agents, robot.pose.position());
            rf.collision = rf.clearance < robot.spec.model.radius;
            frame.robots.push_back(rf);

            if (rf.collision && !prev_flag[r] &&
                (!has_event[r] || free_accum[r] >= params.collision_debounce_s - 1e-9)) {
                record.collision_events.push_back(
                    {frame_t, static_cast<int>(r), robot.pose.position()});
                has_event[r] = true;
                free_accum[r] = 0.0;
            }
            if (!rf.collision) free_accum[r] += params.control_dt;
            prev_flag[r] = rf.collision;

            if (!done[r] &&
                distance(robot.pose.position(), robot.spec.goal) < params.goal_tolerance)
                done[r] = true;
            all_done = all_done && done[r];

            frame.scan_digest.push_back(digest(last_scans[r], params.scan_digest_stride));
        }
        for (const PedestrianState& p : crowd.states())
            frame.pedestrians.emplace_back(p.id, p.position);
        record.frames.push_back(std::move(frame));

        if (all_done) {
            record.outcome = Outcome::Success;
            break;
        }
        if (params.collision_abort_limit > 0 &&
            static_cast<int>(record.collision_events.size()) >= params.collision_abort_limit) {
            record.outcome = Outcome::CollisionLimit;
            break;
        }
        if (frame_t >= scenario.timeout - 1e-9) {
            record.outcome = Outcome::Timeout;
            break;
        }
    }

    for (auto& p : planners) {
        try {
            p->shutdown();
        } catch (...) {
        }
    }
    return record;
}

void run_batch(std::span<const Scenario> scenarios, std::span<const WorldMap> maps,
               std::span<const PlannerSpec> planners, const BatchConfig& config,
               const std::function<void(EpisodeRecord&&)>& sink) {
    if (scenarios.size() != maps.size())
        throw std::invalid_argument("run_batch: one resolved map per scenario required");

    struct Cell {
        std::size_t scenario;
        std::size_t planner;
        int episode;
    };
    std::vector<Cell> tasks;
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
        const int episodes = config.episodes > 0 ? config.episodes : scenarios[s].episodes;
        for (std::size_t p = 0; p < planners.size(); ++p)
            for (int e = 0; e < episodes; ++e) tasks.push_back({s, p, e});
    }

    std::atomic<std::size_t> next{0};
    std::mutex sink_mutex;
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Cell& cell = tasks[i];
            try {
                EpisodeRecord record = run_episode(
                    scenarios[cell.scenario], maps[cell.scenario], planners[cell.planner],
                    config.seed_base + static_cast<std::uint64_t>(cell.episode), cell.episode,
                    config.episode);
                std::lock_guard<std::mutex> lock(sink_mutex);
                sink(std::move(record));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int n_threads = std::max(1, config.parallelism);
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace navbench
