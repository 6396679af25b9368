#include "socialgrid/harness/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "socialgrid/metrics/metrics.hpp"

namespace socialgrid {

namespace fs = std::filesystem;

namespace {

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string record_key(const std::string& population, const std::string& scenario, int episode) {
  return population + '\n' + scenario + '\n' + std::to_string(episode);
}

// Drops a torn final line so appends start on a fresh line.
void repair_tail(const fs::path& path) {
  if (!fs::exists(path)) return;
  std::string data;
  {
    std::ifstream in(path, std::ios::binary);
    data.assign(std::istreambuf_iterator<char>(in), {});
  }
  if (data.empty() || data.back() == '\n') return;
  const auto cut = data.rfind('\n');
  fs::resize_file(path, cut == std::string::npos ? 0 : cut + 1);
}

struct Task {
  std::string population;
  const ScenarioEntry* entry;
  const Population* focal;
  int episode;
};

}  // namespace

std::uint64_t episode_seed(std::uint64_t seed_base, const std::string& scenario, int episode) {
  const auto h = hash_combine(hash_combine(seed_base, static_cast<std::uint64_t>(Stream::kEpisodeSeed)), fnv1a64(scenario));
  return hash_combine(h, static_cast<std::uint64_t>(episode));
}

nlohmann::json make_record(const std::string& population, const ScenarioEntry& entry, int episode,
                           const EpisodeResult& result) {
  const auto& sc = entry.scenario;
  std::map<std::string, int> counts;
  for (const auto& e : result.events) ++counts[e.name];
  nlohmann::json r;
  r["population"] = population;
  r["scenario"] = sc.config.id;
  r["substrate"] = sc.substrate.id;
  r["mode"] = std::string(mode_name(sc.config.mode));
  r["episode"] = episode;
  r["seed"] = result.seed;
  r["c"] = result.c;
  r["policies"] = result.policy_ids;
  r["returns"] = result.returns;
  r["steps"] = result.steps;
  r["event_counts"] = counts;
  r["event_digest"] = hex(result.event_digest);
  r["state_digest"] = hex(result.state_digest);
  r["aborted"] = result.aborted;
  if (result.aborted) {
    r["abort_reason"] = result.abort_reason;
    r["focal_per_capita"] = nullptr;
  } else {
    r["focal_per_capita"] = focal_per_capita(result);
  }
  const auto bg = background_returns(result);
  r["background_per_capita"] = nullptr;
  r["background_equality"] = nullptr;
  if (!bg.empty() && !result.aborted) {
    r["background_per_capita"] = background_per_capita(result);
    if (const auto q = positive_income_equality(bg)) r["background_equality"] = *q;
  }
  return r;
}

std::vector<nlohmann::json> read_records(const fs::path& path) {
  std::vector<nlohmann::json> out;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (in.eof()) break;  // no trailing newline: torn write
    if (line.empty()) continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception&) {
      throw ConfigError(path.string() + ": malformed record");
    }
  }
  return out;
}

EvaluationSummary run_evaluation(const Registry& registry, const EvaluationJob& job) {
  if (job.jobs < 1) throw ConfigError("parallelism must be >= 1");
  if (job.scenarios.empty()) throw ConfigError("no scenarios to evaluate");
  std::vector<std::string> populations = job.populations;
  if (job.add_random_anchor && std::find(populations.begin(), populations.end(), "random") == populations.end()) {
    populations.push_back("random");
  }
  if (populations.empty()) throw ConfigError("no focal populations to evaluate");

  // Resolve everything up front.
  std::map<std::pair<std::string, std::string>, Population> focal;
  for (const auto& sid : job.scenarios) {
    const auto& entry = registry.scenario(sid);
    for (const auto& pop : populations) focal.emplace(std::pair{pop, sid}, registry.population(entry.scenario.config.substrate, pop));
  }
  if (job.episodes && *job.episodes < 1) throw ConfigError("episodes must be >= 1");

  fs::create_directories(job.out_dir);
  EvaluationSummary summary;
  summary.results = job.out_dir / kResultsFile;
  repair_tail(summary.results);
  std::set<std::string> done;
  if (fs::exists(summary.results)) {
    for (const auto& r : read_records(summary.results)) {
      done.insert(record_key(r.at("population"), r.at("scenario"), r.at("episode")));
    }
  }

  std::vector<Task> tasks;
  for (const auto& sid : job.scenarios) {
    const auto& entry = registry.scenario(sid);
    const int episodes = job.episodes.value_or(entry.episodes);
    for (const auto& pop : populations) {
      for (int e = 0; e < episodes; ++e) {
        if (done.count(record_key(pop, sid, e))) {
          ++summary.skipped;
          continue;
        }
        tasks.push_back({pop, &entry, &focal.at({pop, sid}), e});
      }
    }
  }

  std::ofstream out(summary.results, std::ios::app | std::ios::binary);
  if (!out) throw ConfigError("cannot write " + summary.results.string());
  std::mutex write_mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<int> aborted{0};
  std::exception_ptr failure;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const auto& t = tasks[i];
      try {
        const auto& sc = t.entry->scenario;
        const auto result = run_episode(sc, *t.focal, episode_seed(job.seed_base + t.entry->seed, sc.config.id, t.episode), true);
        if (result.aborted) ++aborted;
        const std::string line = make_record(t.population, *t.entry, t.episode, result).dump() + "\n";
        const std::lock_guard lock(write_mutex);
        out << line;
        out.flush();
      } catch (...) {
        const std::lock_guard lock(write_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int n = std::min<int>(job.jobs, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
    for (int k = 0; k < n; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  summary.ran = static_cast<int>(tasks.size());
  summary.aborted = aborted;
  return summary;
}

}  // namespace socialgrid
