#include "socialgrid/harness/session.hpp"

namespace socialgrid {

Session::Session(std::shared_ptr<const Registry> registry, const std::string& scenario, std::uint64_t seed)
    : registry_(std::move(registry)), scenario_id_(scenario), entry_(&registry_->scenario(scenario)) {
  reset(seed);
}

void Session::reset(std::uint64_t seed) { runner_ = std::make_unique<EpisodeRunner>(entry_->scenario, seed, nullptr); }

Session::StepOutput Session::step(std::span<const int> actions) {
  if (runner_->aborted()) throw EngineError(scenario_id_ + ": episode aborted: " + runner_->abort_reason());
  runner_->step(actions);
  if (runner_->aborted()) throw EngineError(scenario_id_ + ": episode aborted: " + runner_->abort_reason());
  StepOutput out;
  const auto rewards = runner_->world().last_rewards();
  for (int p : runner_->external_players()) out.rewards.push_back(rewards[p]);
  out.done = runner_->done();
  out.events = runner_->world().last_events();
  return out;
}

int Session::player_of_seat(int seat) const {
  const auto& ext = runner_->external_players();
  if (seat < 0 || seat >= static_cast<int>(ext.size())) {
    throw EngineError("focal seat " + std::to_string(seat) + " out of range [0, " + std::to_string(ext.size()) + ")");
  }
  return ext[seat];
}

Observation Session::observe(int seat) const { return runner_->world().observe(player_of_seat(seat)); }

std::vector<double> Session::focal_returns() const {
  std::vector<double> out;
  const auto ret = runner_->world().returns();
  for (int p : runner_->external_players()) out.push_back(ret[p]);
  return out;
}

}  // namespace socialgrid
