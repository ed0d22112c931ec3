#include <fstream>
#include <sstream>

#include "json.hpp"
#include "navbench/episode.hpp"
#include "navbench/json_io.hpp"

namespace navbench {

using nlohmann::json;

namespace {

json meta_to_json(const EpisodeMeta& m) {
    json robots = json::array();
    for (const RobotModel& model : m.robot_models) robots.push_back(robot_model_to_json(model));
    json goals = json::array();
    for (const Vec2& g : m.goals) goals.push_back(vec2_to_json(g));
    json peds = json::array();
    for (const auto& [id, radius] : m.pedestrian_radii)
        peds.push_back({{"id", id}, {"radius", radius}});
    json discs = json::array();
    for (const Disc& d : m.static_discs)
        discs.push_back(json::array({d.center.x, d.center.y, d.radius}));
    return {{"schema_version", m.schema_version},
            {"scenario", m.scenario_id},
            {"planner", m.planner_id},
            {"episode", m.episode_index},
            {"seed", m.seed},
            {"map_ref", m.map_ref},
            {"map", json::parse(map_to_json_string(m.map))},
            {"robots", robots},
            {"goals", goals},
            {"pedestrians", peds},
            {"static_discs", discs},
            {"control_dt", m.control_dt},
            {"physics_dt", m.physics_dt},
            {"scan_digest_stride", m.scan_digest_stride}};
}

EpisodeMeta meta_from_json(const json& j) {
    check_schema_version(j, 1, "episode record");
    EpisodeMeta m;
    m.scenario_id = j.at("scenario").get<std::string>();
    m.planner_id = j.at("planner").get<std::string>();
    m.episode_index = j.at("episode").get<int>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.map_ref = j.at("map_ref").get<std::string>();
    m.map = map_from_json_string(j.at("map").dump());
    for (const json& r : j.at("robots")) m.robot_models.push_back(robot_model_from_json(r));
    for (const json& g : j.at("goals")) m.goals.push_back(vec2_from_json(g));
    for (const json& p : j.at("pedestrians"))
        m.pedestrian_radii.emplace_back(p.at("id").get<int>(), p.at("radius").get<double>());
    for (const json& d : j.at("static_discs"))
        m.static_discs.push_back(
            {{d.at(0).get<double>(), d.at(1).get<double>()}, d.at(2).get<double>()});
    m.control_dt = j.at("control_dt").get<double>();
    m.physics_dt = j.at("physics_dt").get<double>();
    m.scan_digest_stride = j.at("scan_digest_stride").get<int>();
    return m;
}

json frame_to_json(const Frame& f) {
    json robots = json::array();
    for (const RobotFrame& r : f.robots) {
        robots.push_back({{"pose", pose_to_json(r.pose)},
                          {"twist", twist_to_json(r.twist)},
                          {"commanded", twist_to_json(r.commanded)},
                          {"collision", r.collision},
                          {"clearance", r.clearance}});
    }
    json peds = json::array();
    for (const auto& [id, pos] : f.pedestrians)
        peds.push_back(json::array({id, pos.x, pos.y}));
    return {{"t", f.t},
            {"robots", robots},
            {"pedestrians", peds},
            {"scan_digest", f.scan_digest}};
}

Frame frame_from_json(const json& j) {
    Frame f;
    f.t = j.at("t").get<double>();
    for (const json& r : j.at("robots")) {
        RobotFrame rf;
        rf.pose = pose_from_json(r.at("pose"));
        rf.twist = twist_from_json(r.at("twist"));
        rf.commanded = twist_from_json(r.at("commanded"));
        rf.collision = r.at("collision").get<bool>();
        rf.clearance = r.at("clearance").get<double>();
        f.robots.push_back(rf);
    }
    for (const json& p : j.at("pedestrians"))
        f.pedestrians.emplace_back(p.at(0).get<int>(),
                                   Vec2{p.at(1).get<double>(), p.at(2).get<double>()});
    f.scan_digest = j.at("scan_digest").get<std::vector<std::vector<double>>>();
    return f;
}

json tail_to_json(const EpisodeRecord& record) {
    json events = json::array();
    for (const CollisionEvent& e : record.collision_events)
        events.push_back(json::array({e.t, e.robot, e.position.x, e.position.y}));
    return {{"outcome", to_string(record.outcome)}, {"collision_events", events}};
}

}  // namespace

std::string record_to_jsonl(const EpisodeRecord& record) {
    std::string out = meta_to_json(record.meta).dump();
    out += '\n';
    for (const Frame& f : record.frames) {
        out += frame_to_json(f).dump();
        out += '\n';
    }
    out += tail_to_json(record).dump();
    out += '\n';
    return out;
}

EpisodeRecord record_from_jsonl(const std::string& text) {
    std::vector<json> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        lines.push_back(json::parse(line));
    }
    if (lines.size() < 2)
        throw std::invalid_argument("record: needs at least a meta and an outcome line");
    EpisodeRecord record;
    record.meta = meta_from_json(lines.front());
    for (std::size_t i = 1; i + 1 < lines.size(); ++i)
        record.frames.push_back(frame_from_json(lines[i]));
    const json& tail = lines.back();
    record.outcome = outcome_from_string(tail.at("outcome").get<std::string>());
    for (const json& e : tail.at("collision_events"))
        record.collision_events.push_back({e.at(0).get<double>(), e.at(1).get<int>(),
                                           {e.at(2).get<double>(), e.at(3).get<double>()}});
    return record;
}

void save_record(const EpisodeRecord& record, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << record_to_jsonl(record);
}

EpisodeRecord load_record(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open record file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return record_from_jsonl(ss.str());
}

std::string record_filename(const EpisodeRecord& record) {
    auto sanitize = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                            (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
            out += ok ? c : '-';
        }
        return out;
    };
    char idx[8];
    std::snprintf(idx, sizeof(idx), "%03d", record.meta.episode_index);
    return sanitize(record.meta.scenario_id) + "__" + sanitize(record.meta.planner_id) + "__" +
           idx + ".jsonl";
}

}  // namespace navbench
