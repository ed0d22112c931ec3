#include "navbench/bench_config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "navbench/json_io.hpp"

namespace navbench {

using nlohmann::json;

BenchmarkConfig bench_config_from_json_string(const std::string& text) {
    json j = json::parse(text);
    check_schema_version(j, 1, "benchmark config");
    BenchmarkConfig cfg;
    cfg.scenarios = j.at("scenarios").get<std::vector<std::string>>();
    for (const json& p : j.at("planners")) {
        PlannerSpec spec;
        spec.id = p.at("id").get<std::string>();
        spec.kind = p.value("kind", "builtin");
        if (spec.kind == "builtin") {
            spec.builtin = p.value("builtin", spec.id);
        } else if (spec.kind == "plugin") {
            spec.command = p.at("command").get<std::vector<std::string>>();
        } else {
            throw std::invalid_argument("planner '" + spec.id +
                                        "': kind must be builtin or plugin");
        }
        if (p.contains("config")) spec.config = p.at("config");
        cfg.planners.push_back(std::move(spec));
    }
    cfg.episodes = j.value("episodes", 30);
    cfg.parallelism = j.value("parallelism", 1);
    cfg.seed_base = j.value("seed_base", std::uint64_t{1});
    cfg.output_dir = j.value("output_dir", std::string{});

    if (cfg.scenarios.empty())
        throw std::invalid_argument("benchmark config: needs at least one scenario");
    if (cfg.planners.empty())
        throw std::invalid_argument("benchmark config: needs at least one planner");
    std::set<std::string> ids;
    for (const PlannerSpec& p : cfg.planners)
        if (!ids.insert(p.id).second)
            throw std::invalid_argument("benchmark config: duplicate planner id '" + p.id + "'");
    if (cfg.episodes < 1) throw std::invalid_argument("benchmark config: episodes must be >= 1");
    if (cfg.parallelism < 1)
        throw std::invalid_argument("benchmark config: parallelism must be >= 1");
    return cfg;
}

BenchmarkConfig load_bench_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return bench_config_from_json_string(ss.str());
}

PlannerSpec builtin_planner_spec(const std::string& id) {
    PlannerSpec spec;
    spec.id = id;
    spec.kind = "builtin";
    spec.builtin = id;
    return spec;
}

std::string default_output_dir() {
    if (const char* env = std::getenv("NAVBENCH_OUTPUT_DIR")) return env;
    return "navbench_out";
}

}  // namespace navbench
