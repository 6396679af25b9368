// socialgrid: list, check and evaluate scenarios from the command line.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "socialgrid/bots/qc.hpp"
#include "socialgrid/harness/evaluation.hpp"
#include "socialgrid/harness/registry.hpp"
#include "socialgrid/harness/render.hpp"
#include "socialgrid/harness/report.hpp"

namespace sg = socialgrid;
namespace fs = std::filesystem;

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += std::to_string(x);
  return s;
}

int list_substrates(const sg::Registry& reg) {
  for (const auto& id : reg.substrate_ids()) {
    const auto& s = reg.substrate(id);
    std::cout << id << "  kind=" << s.kind << "  players=" << s.players << "  episode_length=" << s.episode_length
              << "  map=" << s.map.width() << "x" << s.map.height() << "  bots=" << reg.bots(id).size() << '\n';
  }
  return 0;
}

int list_scenarios(const sg::Registry& reg, const std::string& substrate) {
  for (const auto& id : reg.scenario_ids()) {
    const auto& e = reg.scenario(id);
    const auto& cfg = e.scenario.config;
    if (!substrate.empty() && cfg.substrate != substrate) continue;
    std::cout << id << "  substrate=" << cfg.substrate << "  mode=" << sg::mode_name(cfg.mode) << "  c=" << join(cfg.c)
              << "  background=";
    bool first = true;
    for (const auto& [h, w] : cfg.background.entries()) {
      std::cout << (first ? "" : "+") << h->id << ":" << w;
      first = false;
    }
    if (first) std::cout << "-";
    std::cout << "\n    " << cfg.description << '\n';
  }
  return 0;
}

int run_qc(const sg::Registry& reg, const std::string& substrate, const std::string& bot, std::uint64_t seed,
           std::optional<int> episodes, const std::string& out) {
  int failed = 0;
  int checked = 0;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& sid : reg.substrate_ids()) {
    if (!substrate.empty() && sid != substrate) continue;
    for (const auto& b : reg.bots(sid)) {
      if (!bot.empty() && b.puppet.id != bot) continue;
      if (!b.qc) {
        std::cout << "SKIP  " << sid << '/' << b.puppet.id << "  no qc criterion\n";
        continue;
      }
      auto cfg = *b.qc;
      if (episodes) cfg.episodes = *episodes;
      const auto rep = sg::qc_run(reg.substrate(sid), b.puppet, cfg, reg.resolver(sid), seed);
      ++checked;
      failed += rep.passed ? 0 : 1;
      std::cout << (rep.passed ? "PASS  " : "FAIL  ") << sid << '/' << b.puppet.id << "  statistic=" << rep.statistic
                << " (" << rep.threshold << ")  " << rep.reason << '\n';
      all.push_back(rep.to_json());
    }
  }
  if (!bot.empty() && checked == 0) throw sg::ConfigError("no bot '" + bot + "' with a qc criterion");
  if (!out.empty()) {
    fs::create_directories(out);
    std::ofstream(fs::path(out) / "qc.json") << all.dump(2) << '\n';
  }
  std::cout << checked - failed << "/" << checked << " bots passed\n";
  return failed == 0 ? 0 : 1;
}

int run_report(const sg::Registry& reg, const fs::path& out) {
  const auto records = sg::read_records(out / sg::kResultsFile);
  const auto report = sg::build_report(records, &reg);
  sg::write_report(report, out);
  for (const auto& s : report.substrates) {
    std::cout << s.population << "  " << s.substrate << "  score=" << s.score << "  scenarios=" << s.scenarios << '\n';
  }
  for (std::size_t i = 0; i < report.matches.size() && i < report.elo.elo.size(); ++i) {
    std::cout << "elo  " << report.matches.names[i] << "  " << report.elo.elo[i] << "  normalized=" << report.elo.normalized[i]
              << '\n';
  }
  for (const auto& w : report.elo.warnings) std::cout << "warning: " << w << '\n';
  std::cout << "wrote " << (out / "report.json").string() << " and " << (out / "report.csv").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-agent gridworld substrates and scenario evaluation"};
  app.require_subcommand(1);
  std::string data;
  std::uint64_t seed = 0;
  std::optional<int> episodes;
  int jobs = 1;
  std::string out = "out";
  app.add_option("--data", data, "Registry directory (default: $SOCIALGRID_DATA or the built-in data dir)");

  auto* ls_sub = app.add_subcommand("list-substrates", "List registered substrates");
  auto* ls_scen = app.add_subcommand("list-scenarios", "List registered scenarios");
  std::string substrate;
  ls_scen->add_option("--substrate", substrate, "Only scenarios of this substrate");

  auto* qc = app.add_subcommand("qc", "Run quality control for background bots");
  std::string bot;
  qc->add_option("--substrate", substrate, "Only bots of this substrate");
  qc->add_option("--bot", bot, "Only this bot");
  qc->add_option("--seed", seed, "Seed base");
  qc->add_option("--episodes", episodes, "Override the episode count (10-30)")->check(CLI::Range(10, 30));
  std::string qc_out;
  qc->add_option("--out", qc_out, "Directory for qc.json");

  auto* ev = app.add_subcommand("eval", "Evaluate focal populations on scenarios");
  std::vector<std::string> populations;
  std::vector<std::string> scenarios;
  bool all_scenarios = false;
  bool no_anchor = false;
  ev->add_option("--population,-p", populations, "Focal population: policy ids joined by '+' (repeatable)");
  ev->add_option("--scenario,-s", scenarios, "Scenario id (repeatable)");
  ev->add_flag("--all", all_scenarios, "Every registered scenario");
  ev->add_option("--seed", seed, "Seed base");
  ev->add_option("--episodes", episodes, "Episodes per scenario (default: each scenario's own)")->check(CLI::PositiveNumber);
  ev->add_option("--jobs,-j", jobs, "Parallel episodes")->check(CLI::PositiveNumber);
  ev->add_option("--out,-o", out, "Output directory");
  ev->add_flag("--no-random-anchor", no_anchor, "Do not add the random policy as the lower score anchor");

  auto* rp = app.add_subcommand("report", "Rebuild report.json and report.csv from results.jsonl");
  rp->add_option("--out,-o", out, "Directory holding results.jsonl");

  auto* rd = app.add_subcommand("render", "Re-simulate a recorded episode and write PPM frames");
  std::string results;
  int line = 0;
  bool views = false;
  rd->add_option("--results", results, "results.jsonl to read")->required();
  rd->add_option("--line", line, "Zero-based record index")->check(CLI::NonNegativeNumber);
  rd->add_option("--out,-o", out, "Frame directory");
  rd->add_flag("--views", views, "Also write each player's egocentric view");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto reg = sg::Registry::open(data.empty() ? sg::Registry::default_data_dir() : fs::path(data));
    if (*ls_sub) return list_substrates(reg);
    if (*ls_scen) return list_scenarios(reg, substrate);
    if (*qc) return run_qc(reg, substrate, bot, seed, episodes, qc_out);
    if (*ev) {
      if (all_scenarios) scenarios = reg.scenario_ids();
      if (scenarios.empty()) throw sg::ConfigError("eval needs --scenario or --all");
      if (populations.empty()) throw sg::ConfigError("eval needs at least one --population");
      sg::EvaluationJob job{populations, scenarios, episodes, seed, jobs, out, !no_anchor};
      const auto summary = sg::run_evaluation(reg, job);
      std::cout << "ran " << summary.ran << " episodes (" << summary.skipped << " already recorded, " << summary.aborted
                << " aborted) -> " << summary.results.string() << '\n';
      return run_report(reg, out);
    }
    if (*rp) return run_report(reg, out);
    if (*rd) {
      const auto records = sg::read_records(results);
      if (line >= static_cast<int>(records.size())) {
        throw sg::ConfigError("record " + std::to_string(line) + " not found; file has " + std::to_string(records.size()));
      }
      const int frames = sg::render_episode(reg, records[line], out, {views});
      std::cout << "wrote " << frames << " frames to " << out << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
