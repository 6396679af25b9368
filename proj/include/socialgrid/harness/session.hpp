#ifndef SOCIALGRID_HARNESS_SESSION_HPP_
#define SOCIALGRID_HARNESS_SESSION_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "socialgrid/harness/registry.hpp"

namespace socialgrid {

// One episode of a reduced substrate: background seats run their bots and
// the caller drives the focal seats. Focal seat i is the i-th external player
// in ascending player order.
class Session {
 public:
  struct StepOutput {
    std::vector<double> rewards;  // per focal seat
    bool done = false;
    std::span<const Event> events;  // valid until the next call
  };

  Session(std::shared_ptr<const Registry> registry, const std::string& scenario, std::uint64_t seed);

  void reset(std::uint64_t seed);
  // Throws EngineError without advancing when arity or range is wrong, or
  // after the episode ended.
  StepOutput step(std::span<const int> actions);

  int focal_count() const { return static_cast<int>(runner_->external_players().size()); }
  int num_actions() const { return runner_->world().num_actions(); }
  int step_count() const { return runner_->world().state().step; }
  int episode_length() const { return runner_->world().episode_length(); }
  bool done() const { return runner_->done(); }
  const std::string& scenario_id() const { return scenario_id_; }
  int player_of_seat(int seat) const;

  Observation observe(int seat) const;
  std::vector<double> focal_returns() const;
  EpisodeResult result() const { return runner_->result(false); }
  const Substrate& world() const { return runner_->world(); }

 private:
  std::shared_ptr<const Registry> registry_;
  std::string scenario_id_;
  const ScenarioEntry* entry_;
  std::unique_ptr<EpisodeRunner> runner_;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_HARNESS_SESSION_HPP_
