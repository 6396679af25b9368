#ifndef SOCIALGRID_HARNESS_REPORT_HPP_
#define SOCIALGRID_HARNESS_REPORT_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "socialgrid/harness/registry.hpp"
#include "socialgrid/metrics/elo.hpp"
#include "socialgrid/metrics/metrics.hpp"

namespace socialgrid {

struct ScenarioAnchors {
  double lo = 0.0;
  double hi = 0.0;
  std::string lo_source;  // "random" or "worst"
  std::string hi_source;  // "best_known" or "best"
};

struct ReportRow {
  std::string population;
  std::string scenario;
  std::string substrate;
  std::string mode;
  int episodes = 0;  // completed
  int aborted = 0;   // missing data, excluded from every mean
  double focal_per_capita = 0.0;
  double focal_stderr = 0.0;
  std::optional<double> background_per_capita;  // omitted for resident and universalization
  std::optional<double> equality;
  int equality_missing = 0;  // episodes where no background return was positive
  ScenarioAnchors anchors;
  NormalizedScore score;
};

struct SubstrateScore {
  std::string population;
  std::string substrate;
  double score = 0.0;  // mean normalized score over its scenarios
  int scenarios = 0;
};

struct Report {
  std::vector<ReportRow> rows;
  std::vector<SubstrateScore> substrates;
  MatchTable matches;
  EloFit elo;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// `registry` supplies best-known anchors and may be null.
Report build_report(const std::vector<nlohmann::json>& records, const Registry* registry);

// Writes report.json and report.csv into dir.
void write_report(const Report& report, const std::filesystem::path& dir);

}  // namespace socialgrid

#endif  // SOCIALGRID_HARNESS_REPORT_HPP_
