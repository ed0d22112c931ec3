#include "navbench/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "navbench/clearance.hpp"
#include "navbench/json_io.hpp"
#include "navbench/mapgen.hpp"
#include "navbench/pathfind.hpp"

namespace navbench {

using nlohmann::json;

TaskModeKind task_mode_from_string(const std::string& s) {
    if (s == "scenario") return TaskModeKind::Scenario;
    if (s == "random") return TaskModeKind::Random;
    if (s == "random_position_unknown") return TaskModeKind::RandomPositionUnknown;
    if (s == "random_map_unknown") return TaskModeKind::RandomMapUnknown;
    if (s == "random_both_unknown") return TaskModeKind::RandomBothUnknown;
    throw std::invalid_argument("unknown task mode '" + s + "'");
}

std::string to_string(TaskModeKind kind) {
    switch (kind) {
        case TaskModeKind::Scenario: return "scenario";
        case TaskModeKind::Random: return "random";
        case TaskModeKind::RandomPositionUnknown: return "random_position_unknown";
        case TaskModeKind::RandomMapUnknown: return "random_map_unknown";
        case TaskModeKind::RandomBothUnknown: return "random_both_unknown";
    }
    return "?";
}

Scenario sample_task(const WorldMap& base_map, const TaskMode& mode, std::uint64_t seed) {
    if (mode.kind == TaskModeKind::Scenario)
        throw std::invalid_argument("sample_task: scenario-mode tasks are authored, not sampled");
    if (mode.n_pedestrians < 0)
        throw std::invalid_argument("sample_task: n_pedestrians must be >= 0");

    Rng rng(seed);
    Scenario scenario;
    scenario.seed = seed;
    scenario.name = "task_" + to_string(mode.kind) + "_" + std::to_string(seed);

    WorldMap map = mode.n_static_obstacles > 0
                       ? add_random_obstacles(base_map, mode.n_static_obstacles, rng)
                       : base_map;

    RobotSpec robot;  // default model
    const auto blocked = inflate_occupancy(map, robot.model.radius);
    std::vector<std::uint32_t> free_cells;
    for (std::size_t i = 0; i < blocked.size(); ++i)
        if (!blocked[i]) free_cells.push_back(static_cast<std::uint32_t>(i));
    if (free_cells.size() < 2)
        throw std::runtime_error("sample_task: map has too little free space for the robot");

    const double min_separation = 0.4 * std::hypot(map.width_m(), map.height_m());
    auto cell_center = [&](std::uint32_t id) {
        return map.cell_center(static_cast<int>(id % map.width()),
                               static_cast<int>(id / map.width()));
    };

    bool found = false;
    for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
        const Vec2 start = cell_center(free_cells[rng.uniform_int(free_cells.size())]);
        const Vec2 goal = cell_center(free_cells[rng.uniform_int(free_cells.size())]);
        if (distance(start, goal) < min_separation) continue;
        if (!path_exists_on(map, blocked, start, goal)) continue;
        robot.start = Pose2D(start.x, start.y, (goal - start).angle());
        robot.goal = goal;
        found = true;
    }
    if (!found)
        throw std::runtime_error("sample_task: no feasible start/goal pair after 1000 samples");
    scenario.robots.push_back(robot);

    // Pedestrians: non-overlapping free discs, Random behavior over the map
    // interior, one sampled initial waypoint each.
    const double res = map.resolution();
    BehaviorMode random_behavior;
    random_behavior.kind = BehaviorKind::Random;
    random_behavior.bounds_x0 = map.origin().x + res;
    random_behavior.bounds_y0 = map.origin().y + res;
    random_behavior.bounds_x1 = map.origin().x + map.width_m() - res;
    random_behavior.bounds_y1 = map.origin().y + map.height_m() - res;

    std::vector<Disc> placed{{robot.start.position(), robot.model.radius}};
    for (int i = 0; i < mode.n_pedestrians; ++i) {
        PedestrianState ped;
        ped.id = i + 1;
        ped.radius = 0.25;
        ped.behavior = random_behavior;
        bool ok = false;
        for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
            const Vec2 p{rng.uniform(random_behavior.bounds_x0, random_behavior.bounds_x1),
                         rng.uniform(random_behavior.bounds_y0, random_behavior.bounds_y1)};
            if (clearance(map, placed, p) < ped.radius + 0.05) continue;
            ped.position = p;
            ok = true;
        }
        if (!ok)
            throw std::runtime_error("sample_task: could not place pedestrian " +
                                     std::to_string(ped.id) + " after 1000 samples");
        ped.v0 = rng.uniform(0.8, 1.2);
        ped.waypoints.resize(1);
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const Vec2 w{rng.uniform(random_behavior.bounds_x0, random_behavior.bounds_x1),
                         rng.uniform(random_behavior.bounds_y0, random_behavior.bounds_y1)};
            int cx, cy;
            map.cell_of(w, cx, cy);
            if (map.occupied(cx, cy)) continue;
            ped.waypoints[0] = w;
            break;
        }
        placed.push_back({ped.position, ped.radius});
        scenario.pedestrians.push_back(std::move(ped));
    }

    if (mode.kind == TaskModeKind::RandomPositionUnknown ||
        mode.kind == TaskModeKind::RandomBothUnknown) {
        scenario.position_known = false;
        scenario.odometry_noise = {true, 0.03, 0.01, 0.01};
    }
    if (mode.kind == TaskModeKind::RandomMapUnknown ||
        mode.kind == TaskModeKind::RandomBothUnknown) {
        scenario.map_known = false;
    }

    scenario.inline_map = std::move(map);
    return scenario;
}

WorldMap scenario_map(const Scenario& scenario, const std::string& base_dir) {
    if (scenario.inline_map) return *scenario.inline_map;
    if (scenario.map_ref.empty())
        throw std::runtime_error("scenario '" + scenario.name + "' has neither map nor map_ref");
    std::filesystem::path p(scenario.map_ref);
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    return load_map(p.string());
}

std::string scenario_to_json_string(const Scenario& s) {
    json j;
    j["schema_version"] = s.schema_version;
    j["name"] = s.name;
    if (s.inline_map) {
        j["map"] = json::parse(map_to_json_string(*s.inline_map));
    } else {
        j["map_ref"] = s.map_ref;
    }
    json robots = json::array();
    for (const RobotSpec& r : s.robots) {
        robots.push_back({{"model", robot_model_to_json(r.model)},
                          {"start", pose_to_json(r.start)},
                          {"goal", vec2_to_json(r.goal)}});
    }
    j["robots"] = std::move(robots);
    json peds = json::array();
    for (const PedestrianState& p : s.pedestrians) peds.push_back(pedestrian_to_json(p));
    j["pedestrians"] = std::move(peds);
    j["seed"] = s.seed;
    j["timeout"] = s.timeout;
    j["dt"] = s.dt;
    j["episodes"] = s.episodes;
    j["map_known"] = s.map_known;
    j["position_known"] = s.position_known;
    j["odometry_noise"] = odometry_noise_to_json(s.odometry_noise);
    j["social_force"] = social_force_params_to_json(s.social_force);
    return j.dump();
}

Scenario scenario_from_json_string(const std::string& text) {
    json j = json::parse(text);
    check_schema_version(j, 1, "scenario");
    Scenario s;
    s.name = j.at("name").get<std::string>();
    if (j.contains("map")) {
        s.inline_map = map_from_json_string(j.at("map").dump());
    } else {
        s.map_ref = j.at("map_ref").get<std::string>();
    }
    for (const json& r : j.at("robots")) {
        RobotSpec spec;
        spec.model = robot_model_from_json(r.at("model"));
        spec.start = pose_from_json(r.at("start"));
        spec.goal = vec2_from_json(r.at("goal"));
        s.robots.push_back(std::move(spec));
    }
    if (s.robots.empty()) throw std::invalid_argument("scenario: needs at least one robot");
    for (const json& p : j.at("pedestrians")) s.pedestrians.push_back(pedestrian_from_json(p));
    s.seed = j.at("seed").get<std::uint64_t>();
    s.timeout = j.at("timeout").get<double>();
    s.dt = j.at("dt").get<double>();
    s.episodes = j.at("episodes").get<int>();
    s.map_known = j.at("map_known").get<bool>();
    s.position_known = j.at("position_known").get<bool>();
    s.odometry_noise = odometry_noise_from_json(j.at("odometry_noise"));
    s.social_force = social_force_params_from_json(j.at("social_force"));
    if (!(s.timeout > 0.0)) throw std::invalid_argument("scenario: timeout must be > 0");
    if (!(s.dt > 0.0 && s.dt <= 0.1))
        throw std::invalid_argument("scenario: dt must be in (0, 0.1]");
    if (s.episodes < 1) throw std::invalid_argument("scenario: episodes must be >= 1");
    return s;
}

void save_scenario(const Scenario& scenario, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << scenario_to_json_string(scenario) << '\n';
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return scenario_from_json_string(ss.str());
}

}  // namespace navbench
