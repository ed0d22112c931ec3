#pragma once

#include <string>
#include <vector>

#include "navbench/planner.hpp"

namespace navbench {

/// `run` configuration: which scenarios, which planners, how many episodes.
/// Scenario paths are resolved relative to the config file's directory.
struct BenchmarkConfig {
    int schema_version{1};
    std::vector<std::string> scenarios;
    std::vector<PlannerSpec> planners;
    int episodes{30};
    int parallelism{1};
    std::uint64_t seed_base{1};
    std::string output_dir;  // empty: $NAVBENCH_OUTPUT_DIR or "navbench_out"
};

BenchmarkConfig bench_config_from_json_string(const std::string& text);
BenchmarkConfig load_bench_config(const std::string& path);

/// Default planner grid for flag-only runs: builtin ids.
PlannerSpec builtin_planner_spec(const std::string& id);

std::string default_output_dir();

}  // namespace navbench
