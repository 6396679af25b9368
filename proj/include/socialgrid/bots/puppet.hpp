#ifndef SOCIALGRID_BOTS_PUPPET_HPP_
#define SOCIALGRID_BOTS_PUPPET_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "socialgrid/protocol/policy.hpp"

namespace socialgrid {

enum class Who { kAny, kSelf, kOther };

// step % period in [begin, end)
struct Phase {
  int period = 1;
  int begin = 0;
  int end = 1;

  bool contains(int step) const;
  static Phase from_json(const nlohmann::json& j);
};

// Matches single events. An empty payload matches any payload; listed keys
// must be present with exactly the given value.
struct EventFilter {
  std::string event;
  Who actor = Who::kAny;
  Who target = Who::kAny;
  std::vector<std::pair<std::string, double>> payload;

  bool matches(const Event& e, int self) const;
  static EventFilter from_json(const nlohmann::json& j);
};

struct Trigger {
  std::optional<EventFilter> filter;  // absent: phase-only trigger
  int within = 0;                     // look-back in steps, 0 = whole episode
  int min_count = 1;
  int min_distinct_actors = 1;
  bool latch = false;  // once true, stays true for the episode
  std::optional<Phase> phase;

  static Trigger from_json(const nlohmann::json& j);
};

struct PuppetRule {
  Trigger when;
  std::string behavior;
};

// A scripted bot: the first rule whose trigger holds picks the behavior,
// otherwise the default runs.
struct PuppetSpec {
  std::string id;
  std::vector<PuppetRule> rules;
  std::string default_behavior;

  // {"id", "rules": [{"when": {...}, "do": "behavior"}], "default": "behavior"}.
  // Unknown events and behaviors are rejected with ConfigError.
  static PuppetSpec from_json(const nlohmann::json& j);
};

PolicyHandlePtr compile_puppet(const PuppetSpec& spec);

}  // namespace socialgrid

#endif  // SOCIALGRID_BOTS_PUPPET_HPP_
