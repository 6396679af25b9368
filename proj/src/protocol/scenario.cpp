#include "socialgrid/protocol/scenario.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "socialgrid/substrates.hpp"

namespace socialgrid {

std::string_view mode_name(ScenarioMode m) {
  switch (m) {
    case ScenarioMode::kResident: return "resident";
    case ScenarioMode::kVisitor: return "visitor";
    case ScenarioMode::kHalfAndHalf: return "half_and_half";
    case ScenarioMode::kUniversalization: return "universalization";
  }
  return "unknown";
}

ScenarioMode parse_mode(std::string_view s) {
  if (s == "resident") return ScenarioMode::kResident;
  if (s == "visitor") return ScenarioMode::kVisitor;
  if (s == "half_and_half") return ScenarioMode::kHalfAndHalf;
  if (s == "universalization") return ScenarioMode::kUniversalization;
  throw std::invalid_argument("unknown scenario mode '" + std::string(s) + "'");
}

int focal_count(std::span<const int> c) { return static_cast<int>(std::count(c.begin(), c.end(), 1)); }

Scenario build_scenario(ScenarioConfig cfg, SubstrateSpec spec) {
  const std::string& id = cfg.id;
  if (cfg.substrate != spec.id) throw std::invalid_argument(id + ": substrate spec '" + spec.id + "' does not match '" + cfg.substrate + "'");
  if (static_cast<int>(cfg.c.size()) != spec.players) {
    throw std::invalid_argument(id + ": c has " + std::to_string(cfg.c.size()) + " entries but " + spec.id + " has " +
                                std::to_string(spec.players) + " players");
  }
  for (int v : cfg.c) {
    if (v != 0 && v != 1) throw std::invalid_argument(id + ": c entries must be 0 or 1");
  }
  const int ones = focal_count(cfg.c);
  const int zeros = static_cast<int>(cfg.c.size()) - ones;
  if (ones == 0) throw std::invalid_argument(id + ": c has no focal seats");
  bool consistent = false;
  switch (cfg.mode) {
    case ScenarioMode::kResident: consistent = ones > zeros; break;
    case ScenarioMode::kVisitor: consistent = zeros > ones; break;
    case ScenarioMode::kHalfAndHalf: consistent = ones == zeros; break;
    case ScenarioMode::kUniversalization: consistent = zeros == 0; break;
  }
  if (!consistent) {
    throw std::invalid_argument(id + ": mode " + std::string(mode_name(cfg.mode)) + " does not match c (" +
                                std::to_string(ones) + " focal, " + std::to_string(zeros) + " background)");
  }
  if (zeros > 0 && cfg.background.empty()) throw std::invalid_argument(id + ": background population is empty");
  return Scenario{std::move(cfg), std::move(spec)};
}

SeatAssignment assign_seats(const Scenario& sc, const Population* focal, std::uint64_t seed) {
  const int n = sc.num_players();
  const CounterRng rng(seed);
  SeatAssignment s;
  s.player_of_slot.resize(n);
  std::iota(s.player_of_slot.begin(), s.player_of_slot.end(), 0);
  for (int i = n; i > 1; --i) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i), Stream::kSeatShuffle, 0, i));
    std::swap(s.player_of_slot[i - 1], s.player_of_slot[j]);
  }
  s.c.assign(n, 0);
  s.handles.assign(n, nullptr);
  const bool universal = sc.config.mode == ScenarioMode::kUniversalization;
  PolicyHandlePtr shared;
  if (universal && focal) shared = focal->sample(rng, 0, 0);
  for (int j = 0; j < n; ++j) {
    const int p = s.player_of_slot[j];
    s.c[p] = sc.config.c[j];
    if (sc.config.c[j] == 1) {
      if (focal) s.handles[p] = universal ? shared : focal->sample(rng, 0, static_cast<std::uint64_t>(j));
    } else {
      s.handles[p] = sc.config.background.sample(rng, 1, static_cast<std::uint64_t>(j));
    }
  }
  return s;
}

EpisodeRunner::EpisodeRunner(const Scenario& sc, std::uint64_t seed, const Population* focal)
    : scenario_(sc), seed_(seed), seats_(assign_seats(sc, focal, seed)), world_(make_substrate(sc.substrate, seed)) {
  const int n = sc.num_players();
  policies_.resize(n);
  joint_.assign(n, action::kNoop);
  for (int p = 0; p < n; ++p) {
    if (!seats_.handles[p]) {
      external_.push_back(p);
      continue;
    }
    policies_[p] = seats_.handles[p]->make();
    policies_[p]->reset(hash_combine(hash_combine(seed, static_cast<std::uint64_t>(Stream::kPolicy)), p));
  }
}

EpisodeRunner::~EpisodeRunner() = default;

void EpisodeRunner::step(std::span<const int> external_actions) {
  if (aborted_) throw EngineError(scenario_.config.id + ": episode was aborted: " + abort_reason_);
  if (world_->done()) throw EngineError(scenario_.config.id + ": episode already finished");
  if (external_actions.size() != external_.size()) {
    throw EngineError(scenario_.config.id + ": expected " + std::to_string(external_.size()) + " actions, got " +
                      std::to_string(external_actions.size()));
  }
  const int na = world_->num_actions();
  for (std::size_t i = 0; i < external_actions.size(); ++i) {
    if (external_actions[i] < 0 || external_actions[i] >= na) {
      throw EngineError(scenario_.config.id + ": action " + std::to_string(external_actions[i]) + " for focal seat " +
                        std::to_string(i) + " is outside [0, " + std::to_string(na) + ")");
    }
    joint_[external_[i]] = external_actions[i];
  }
  const auto feed = world_->last_events();
  const auto rewards = world_->last_rewards();
  const int t = world_->state().step;
  for (std::size_t p = 0; p < policies_.size(); ++p) {
    if (!policies_[p]) continue;
    const StepContext ctx{*world_, static_cast<int>(p), feed, rewards[p], t};
    int a = 0;
    try {
      a = policies_[p]->act(ctx);
    } catch (const std::exception& e) {
      aborted_ = true;
      abort_reason_ = "policy '" + seats_.handles[p]->id + "' (player " + std::to_string(p) + ") failed: " + e.what();
      return;
    }
    if (a < 0 || a >= na) {
      aborted_ = true;
      abort_reason_ = "policy '" + seats_.handles[p]->id + "' (player " + std::to_string(p) + ") chose illegal action " +
                      std::to_string(a) + " at step " + std::to_string(t);
      return;
    }
    joint_[p] = a;
  }
  world_->step(joint_);
}

void EpisodeRunner::run_to_end() {
  while (!done()) step();
}

EpisodeResult EpisodeRunner::result(bool keep_events) const {
  EpisodeResult r;
  r.scenario_id = scenario_.config.id;
  r.seed = seed_;
  r.c = seats_.c;
  for (const auto& h : seats_.handles) r.policy_ids.push_back(h ? h->id : "external");
  const auto ret = world_->returns();
  r.returns.assign(ret.begin(), ret.end());
  const auto& log = world_->state().event_log;
  r.event_digest = event_digest(log);
  r.state_digest = world_->digest();
  if (keep_events) r.events = log;
  r.steps = world_->state().step;
  r.aborted = aborted_;
  r.abort_reason = abort_reason_;
  return r;
}

EpisodeResult run_episode(const Scenario& sc, const Population& focal, std::uint64_t seed, bool keep_events) {
  if (focal.empty()) throw std::invalid_argument(sc.config.id + ": focal population is empty");
  EpisodeRunner runner(sc, seed, &focal);
  runner.run_to_end();
  return runner.result(keep_events);
}

double focal_per_capita(const EpisodeResult& result) {
  double sum = 0.0;
  int m = 0;
  for (std::size_t i = 0; i < result.c.size(); ++i) {
    if (result.c[i] != 1) continue;
    sum += result.returns.at(i);
    ++m;
  }
  if (m == 0) throw std::invalid_argument("focal_per_capita: result has no focal players");
  return sum / m;
}

}  // namespace socialgrid
