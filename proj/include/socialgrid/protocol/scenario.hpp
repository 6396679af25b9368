#ifndef SOCIALGRID_PROTOCOL_SCENARIO_HPP_
#define SOCIALGRID_PROTOCOL_SCENARIO_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "socialgrid/core/substrate.hpp"
#include "socialgrid/protocol/policy.hpp"

namespace socialgrid {

enum class ScenarioMode { kResident, kVisitor, kHalfAndHalf, kUniversalization };

std::string_view mode_name(ScenarioMode m);
ScenarioMode parse_mode(std::string_view s);

struct ScenarioConfig {
  std::string id;
  std::string substrate;
  std::vector<int> c;  // 1 = focal slot, 0 = background slot
  Population background;
  ScenarioMode mode = ScenarioMode::kResident;
  std::string description;
};

int focal_count(std::span<const int> c);

struct Scenario {
  ScenarioConfig config;
  SubstrateSpec substrate;

  int num_players() const { return substrate.players; }
  int focal_count() const { return socialgrid::focal_count(config.c); }
};

// Checks c against the substrate and the declared mode; throws
// std::invalid_argument with the reason.
Scenario build_scenario(ScenarioConfig cfg, SubstrateSpec spec);

// Per-episode binding of slots to players.
struct SeatAssignment {
  std::vector<int> player_of_slot;       // slot j of c plays as player player_of_slot[j]
  std::vector<int> c;                    // per player
  std::vector<PolicyHandlePtr> handles;  // per player; null for externally driven seats
};

// Seeded slot-to-seat shuffle plus population draws. With `focal` null the
// focal seats are left external. In universalization mode one focal draw
// fills every seat.
SeatAssignment assign_seats(const Scenario& sc, const Population* focal, std::uint64_t seed);

struct EpisodeResult {
  std::string scenario_id;
  std::uint64_t seed = 0;
  std::vector<int> c;                   // per player
  std::vector<std::string> policy_ids;  // per player, "external" for caller-driven seats
  std::vector<double> returns;
  std::vector<Event> events;
  std::uint64_t event_digest = 0;
  std::uint64_t state_digest = 0;
  int steps = 0;
  bool aborted = false;
  std::string abort_reason;
};

// Drives one episode. Internal seats act through their policies; external
// seats take the actions passed to step().
class EpisodeRunner {
 public:
  EpisodeRunner(const Scenario& sc, std::uint64_t seed, const Population* focal);
  ~EpisodeRunner();
  EpisodeRunner(const EpisodeRunner&) = delete;
  EpisodeRunner& operator=(const EpisodeRunner&) = delete;

  const Substrate& world() const { return *world_; }
  const SeatAssignment& seats() const { return seats_; }
  // Players whose actions come from the caller, in ascending order.
  const std::vector<int>& external_players() const { return external_; }
  bool done() const { return world_->done() || aborted_; }
  bool aborted() const { return aborted_; }
  const std::string& abort_reason() const { return abort_reason_; }

  // Validates external actions (count and range) before anything moves;
  // throws EngineError on a bad vector. A failing internal policy aborts
  // the episode instead.
  void step(std::span<const int> external_actions = {});
  void run_to_end();

  EpisodeResult result(bool keep_events = true) const;

 private:
  const Scenario& scenario_;
  std::uint64_t seed_;
  SeatAssignment seats_;
  std::unique_ptr<Substrate> world_;
  std::vector<std::unique_ptr<Policy>> policies_;
  std::vector<int> external_;
  std::vector<int> joint_;
  bool aborted_ = false;
  std::string abort_reason_;
};

EpisodeResult run_episode(const Scenario& sc, const Population& focal, std::uint64_t seed, bool keep_events = true);

// Mean return over focal players (c_i = 1). Throws when there are none.
double focal_per_capita(const EpisodeResult& result);

}  // namespace socialgrid

#endif  // SOCIALGRID_PROTOCOL_SCENARIO_HPP_
