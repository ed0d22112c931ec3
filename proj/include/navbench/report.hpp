#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "navbench/metrics.hpp"

namespace navbench {

struct EvaluateResult {
    std::vector<MetricsReport> episodes;  // one row per (episode, robot)
    std::vector<AggregateReport> summary;
};

EvaluateResult evaluate_records(std::span<const EpisodeRecord> records);

/// CSV with a leading "# formulas:" comment line pinning the definitions.
std::string episodes_csv(std::span<const MetricsReport> reports);
std::string summary_csv(std::span<const AggregateReport> aggregates);
nlohmann::json metrics_json(const EvaluateResult& result);

/// All *.jsonl records in a directory, sorted by filename.
std::vector<EpisodeRecord> load_records_dir(const std::string& dir);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace navbench
