#ifndef SOCIALGRID_BOTS_QC_HPP_
#define SOCIALGRID_BOTS_QC_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "socialgrid/bots/puppet.hpp"
#include "socialgrid/core/substrate.hpp"

namespace socialgrid {

// Behavioral check on a candidate bot. Filters are evaluated relative to
// each candidate player, so actor "self" means the candidate.
struct QCCriterion {
  enum class Kind { kEventRate, kPayloadShare, kConditional, kNever, kPhaseShare, kAll };
  Kind kind = Kind::kEventRate;
  EventFilter filter;
  std::optional<EventFilter> response;  // conditional: what must follow
  int within = 0;                       // conditional: steps allowed for the response
  bool before = false;                  // conditional: response must precede the trigger
  std::string key;                      // payload_share
  double value = 0.0;                   // payload_share
  std::optional<Phase> phase;           // phase_share
  double min = 0.0;                     // lower bound on the statistic
  std::optional<double> max;            // upper bound on the statistic
  std::vector<QCCriterion> all;

  static QCCriterion from_json(const nlohmann::json& j);
};

struct QCConfig {
  int episodes = 10;
  int focal = 1;  // candidate seats per episode
  std::optional<int> episode_length;
  std::vector<std::pair<std::string, double>> partners;  // bot ids or random / noop
  QCCriterion criterion;

  static QCConfig from_json(const nlohmann::json& j);
};

struct QCReport {
  std::string candidate;
  std::string substrate;
  int episodes = 0;
  std::vector<double> per_episode;  // criterion-specific count per episode
  double statistic = 0.0;
  std::string threshold;
  bool passed = false;
  std::string reason;

  nlohmann::json to_json() const;
};

using PolicyResolver = std::function<PolicyHandlePtr(const std::string&)>;

// "random" and "noop" resolve to the built-in policies, anything else goes
// through `bots`.
PolicyResolver builtin_resolver(PolicyResolver bots);

QCReport qc_run(const SubstrateSpec& substrate, const PuppetSpec& candidate, const QCConfig& config,
                const PolicyResolver& resolve, std::uint64_t seed);

}  // namespace socialgrid

#endif  // SOCIALGRID_BOTS_QC_HPP_
