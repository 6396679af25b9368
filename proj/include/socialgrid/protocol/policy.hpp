#ifndef SOCIALGRID_PROTOCOL_POLICY_HPP_
#define SOCIALGRID_PROTOCOL_POLICY_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "socialgrid/core/rng.hpp"
#include "socialgrid/core/substrate.hpp"

namespace socialgrid {

// What a policy sees when choosing its next action. Scripted bots may read
// the world and the event feed; learning agents should use observe() only.
struct StepContext {
  const Substrate& world;
  int player = 0;
  std::span<const Event> new_events;  // everything emitted during the previous step
  double last_reward = 0.0;
  int step = 0;

  Observation observe() const { return world.observe(player); }
};

// A stateful per-episode policy instance.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual void reset(std::uint64_t seed) = 0;
  virtual int act(const StepContext& ctx) = 0;
};

struct PolicyHandle {
  std::string id;
  std::function<std::unique_ptr<Policy>()> make;
};

using PolicyHandlePtr = std::shared_ptr<const PolicyHandle>;

PolicyHandlePtr make_handle(std::string id, std::function<std::unique_ptr<Policy>()> make);

// Uniform over all legal actions of the substrate.
PolicyHandlePtr random_policy();
// Always action 0.
PolicyHandlePtr noop_policy();
// Plays the given action ids in order, then noop.
PolicyHandlePtr scripted_policy(std::string id, std::vector<int> actions);

class Population {
 public:
  Population() = default;
  // Weights must be nonnegative and sum to 1 (within 1e-9).
  explicit Population(std::vector<std::pair<PolicyHandlePtr, double>> entries);
  static Population single(PolicyHandlePtr handle);

  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<PolicyHandlePtr, double>>& entries() const { return entries_; }

  // Independent draw for slot `slot`; a pure function of (rng, counter, slot).
  const PolicyHandlePtr& sample(const CounterRng& rng, std::uint64_t counter, std::uint64_t slot) const;

 private:
  std::vector<std::pair<PolicyHandlePtr, double>> entries_;
  std::vector<double> cdf_;
};

// N independent draws from f.
std::vector<PolicyHandlePtr> sample_joint_policy(const Population& f, int n, std::uint64_t seed);

}  // namespace socialgrid

#endif  // SOCIALGRID_PROTOCOL_POLICY_HPP_
