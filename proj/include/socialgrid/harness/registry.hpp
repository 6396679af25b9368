#ifndef SOCIALGRID_HARNESS_REGISTRY_HPP_
#define SOCIALGRID_HARNESS_REGISTRY_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "socialgrid/bots/puppet.hpp"
#include "socialgrid/bots/qc.hpp"
#include "socialgrid/protocol/scenario.hpp"

namespace socialgrid {

struct BotEntry {
  PuppetSpec puppet;
  std::optional<QCConfig> qc;
  PolicyHandlePtr handle;
};

struct ScenarioEntry {
  Scenario scenario;
  int episodes = 10;
  std::optional<double> best_known;  // upper score anchor, when one is known
  std::uint64_t seed = 0;            // added to the job's seed base
};

// Everything under a data directory:
//   substrates/<id>.json   header + params, "map" and "graph" are relative paths
//   maps/*.txt             ASCII maps
//   graphs/*.json          reaction graphs
//   bots/<substrate>.json  {"substrate", "bots": [puppet + optional "qc"]}
//   scenarios/*.json       {"scenarios": [...]}
// Loading validates every cross-reference, so a registry that opens is
// internally consistent. Immutable afterwards and safe to share across threads.
class Registry {
 public:
  // $SOCIALGRID_DATA when set, otherwise the directory baked in at build time.
  static std::filesystem::path default_data_dir();
  static Registry open(const std::filesystem::path& root);

  const std::filesystem::path& root() const { return root_; }

  std::vector<std::string> substrate_ids() const;
  std::vector<std::string> scenario_ids() const;
  const SubstrateSpec& substrate(const std::string& id) const;
  const ScenarioEntry& scenario(const std::string& id) const;
  const std::vector<BotEntry>& bots(const std::string& substrate) const;
  const BotEntry& bot(const std::string& substrate, const std::string& id) const;

  // "random", "noop" or a bot id of that substrate.
  PolicyResolver resolver(const std::string& substrate) const;
  // A population spec: policy ids joined by '+', weighted uniformly.
  Population population(const std::string& substrate, const std::string& spec) const;

 private:
  std::filesystem::path root_;
  std::map<std::string, SubstrateSpec> substrates_;
  std::map<std::string, std::vector<BotEntry>> bots_;
  std::map<std::string, ScenarioEntry> scenarios_;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_HARNESS_REGISTRY_HPP_
