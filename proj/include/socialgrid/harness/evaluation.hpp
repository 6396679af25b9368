#ifndef SOCIALGRID_HARNESS_EVALUATION_HPP_
#define SOCIALGRID_HARNESS_EVALUATION_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "socialgrid/harness/registry.hpp"

namespace socialgrid {

struct EvaluationJob {
  std::vector<std::string> populations;  // population specs, see Registry::population
  std::vector<std::string> scenarios;
  std::optional<int> episodes;  // overrides each scenario's default
  std::uint64_t seed_base = 0;
  int jobs = 1;
  std::filesystem::path out_dir;
  bool add_random_anchor = true;  // also evaluate "random" for the lower score anchor
};

struct EvaluationSummary {
  int ran = 0;
  int skipped = 0;  // already present in the results file
  int aborted = 0;
  std::filesystem::path results;
};

inline constexpr const char* kResultsFile = "results.jsonl";

// Seed of one episode. Independent of the population, so populations
// evaluated on the same scenario see the same worlds.
std::uint64_t episode_seed(std::uint64_t seed_base, const std::string& scenario, int episode);

// One line of the results file.
nlohmann::json make_record(const std::string& population, const ScenarioEntry& entry, int episode,
                           const EpisodeResult& result);

// Runs every (population, scenario, episode) not yet in out_dir/results.jsonl.
// All ids are resolved before the first episode starts. Records are
// appended one line at a time by a single writer.
EvaluationSummary run_evaluation(const Registry& registry, const EvaluationJob& job);

// Complete records of a results file; a torn final line is ignored.
std::vector<nlohmann::json> read_records(const std::filesystem::path& path);

}  // namespace socialgrid

#endif  // SOCIALGRID_HARNESS_EVALUATION_HPP_
