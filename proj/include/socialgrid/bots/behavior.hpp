#ifndef SOCIALGRID_BOTS_BEHAVIOR_HPP_
#define SOCIALGRID_BOTS_BEHAVIOR_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socialgrid/core/substrate.hpp"

namespace socialgrid {

struct BehaviorContext {
  const Substrate& world;
  int player = 0;
  int step = 0;
  std::uint64_t seed = 0;             // per-episode policy seed
  std::span<const Event> new_events;  // emitted during the previous step
};

// A scripted controller. Instances keep state for one episode.
class Behavior {
 public:
  virtual ~Behavior() = default;
  virtual int act(const BehaviorContext& ctx) = 0;
};

struct BehaviorInfo {
  std::string_view name;
  std::string_view argument;  // empty when the behavior takes none
  std::string_view summary;
};

// Registered behaviors, for listings and validation.
std::span<const BehaviorInfo> behavior_library();

// Builds "name" or "name:argument"; throws ConfigError for unknown names
// or malformed arguments.
std::unique_ptr<Behavior> make_behavior(std::string_view spec);

}  // namespace socialgrid

#endif  // SOCIALGRID_BOTS_BEHAVIOR_HPP_
