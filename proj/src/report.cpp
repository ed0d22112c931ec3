#include "navbench/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace navbench {

using nlohmann::json;

namespace {

std::string num(double v) { return json(v).dump(); }  // shortest round-trip repr

std::string opt(const std::optional<double>& v) { return v ? num(*v) : ""; }

std::string formula_comment() {
    std::string line = "# formulas:";
    for (const auto& [k, v] : metric_formulas()) line += " " + k + "=" + v;
    return line + "\n";
}

}  // namespace

EvaluateResult evaluate_records(std::span<const EpisodeRecord> records) {
    EvaluateResult result;
    for (const EpisodeRecord& record : records) {
        for (MetricsReport& m : compute_all_metrics(record))
            result.episodes.push_back(std::move(m));
    }
    if (!result.episodes.empty()) result.summary = aggregate(result.episodes);
    return result;
}

std::string episodes_csv(std::span<const MetricsReport> reports) {
    std::string out = formula_comment();
    out += "scenario,planner,episode,robot,outcome,success,collisions,time_to_goal,"
           "path_length,velocity_avg,acceleration_avg,jerk_avg,curvature_avg,curvature_max,"
           "curvature_min,curvature_normalized,angle_over_length,roughness,clearing_dist_avg,"
           "clearing_dist_max,clearing_dist_min,clearing_dist_normalized\n";
    for (const MetricsReport& m : reports) {
        out += m.scenario_id + "," + m.planner_id + "," + std::to_string(m.episode_index) + "," +
               std::to_string(m.robot_index) + "," + m.outcome + "," +
               (m.success ? "true" : "false") + "," + std::to_string(m.collisions) + "," +
               opt(m.time_to_goal) + "," + num(m.path_length) + "," + opt(m.velocity_avg) + "," +
               opt(m.acceleration_avg) + "," + opt(m.jerk_avg) + "," + opt(m.curvature_avg) +
               "," + opt(m.curvature_max) + "," + opt(m.curvature_min) + "," +
               opt(m.curvature_normalized) + "," + opt(m.angle_over_length) + "," +
               opt(m.roughness) + "," + opt(m.clearing_dist_avg) + "," +
               opt(m.clearing_dist_max) + "," + opt(m.clearing_dist_min) + "," +
               opt(m.clearing_dist_normalized) + "\n";
    }
    return out;
}

std::string summary_csv(std::span<const AggregateReport> aggregates) {
    std::string out = formula_comment();
    out += "scenario,planner,episodes,success_rate";
    for (const std::string& name : aggregated_metric_names())
        for (const char* stat : {"mean", "std", "median", "min", "max"})
            out += "," + name + "_" + stat;
    out += "\n";
    for (const AggregateReport& a : aggregates) {
        out += a.scenario_id + "," + a.planner_id + "," + std::to_string(a.episodes) + "," +
               num(a.success_rate);
        for (const std::string& name : aggregated_metric_names()) {
            const auto it = a.stats.find(name);
            if (it == a.stats.end()) {
                out += ",,,,,";
            } else {
                const StatSummary& s = it->second;
                out += "," + num(s.mean) + "," + num(s.stddev) + "," + num(s.median) + "," +
                       num(s.min) + "," + num(s.max);
            }
        }
        out += "\n";
    }
    return out;
}

json metrics_json(const EvaluateResult& result) {
    json episodes = json::array();
    for (const MetricsReport& m : result.episodes) {
        json row{{"scenario", m.scenario_id}, {"planner", m.planner_id},
                 {"episode", m.episode_index}, {"robot", m.robot_index},
                 {"outcome", m.outcome},       {"success", m.success},
                 {"collisions", m.collisions}, {"path_length", m.path_length}};
        for (const std::string& name : aggregated_metric_names()) {
            if (name == "collisions" || name == "path_length") continue;
            if (auto v = metric_value(m, name)) row[name] = *v;
        }
        episodes.push_back(std::move(row));
    }
    json summary = json::array();
    for (const AggregateReport& a : result.summary) {
        json stats;
        for (const auto& [name, s] : a.stats) {
            stats[name] = {{"mean", s.mean},      {"std", s.stddev}, {"median", s.median},
                           {"min", s.min},        {"max", s.max},    {"count", s.count}};
        }
        summary.push_back({{"scenario", a.scenario_id},
                           {"planner", a.planner_id},
                           {"episodes", a.episodes},
                           {"success_rate", a.success_rate},
                           {"stats", std::move(stats)}});
    }
    return {{"schema_version", 1},
            {"formulas", metric_formulas()},
            {"episodes", std::move(episodes)},
            {"summary", std::move(summary)}};
}

std::vector<EpisodeRecord> load_records_dir(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".jsonl") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<EpisodeRecord> records;
    records.reserve(files.size());
    for (const std::string& f : files) records.push_back(load_record(f));
    return records;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

}  // namespace navbench
