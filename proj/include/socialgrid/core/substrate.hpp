#ifndef SOCIALGRID_CORE_SUBSTRATE_HPP_
#define SOCIALGRID_CORE_SUBSTRATE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "socialgrid/core/ascii_map.hpp"
#include "socialgrid/core/grid_state.hpp"
#include "socialgrid/core/render.hpp"
#include "socialgrid/core/serialize.hpp"

namespace socialgrid {

struct ObservationWindow {
  int ahead = 9;
  int behind = 1;
  int side = 5;

  int rows() const { return ahead + behind + 1; }
  int cols() const { return 2 * side + 1; }
};

struct BeamSpec {
  int range = 3;
  int cooldown = 0;
};

// Reads {"range", "cooldown"} under params[key], keeping fallback values for
// missing fields.
BeamSpec beam_from_json(const nlohmann::json& params, const char* key, BeamSpec fallback);

struct BeamHit {
  enum class Kind : std::uint8_t { kCell, kAvatar };
  Kind kind = Kind::kCell;
  Position position;
  int player = -1;  // set for avatar hits

  bool operator==(const BeamHit&) const = default;
};

// What a beam does when it reaches a cell.
enum class BeamCell : std::uint8_t {
  kPass,     // travels on, cell not reported
  kHitPass,  // cell reported, beam travels on
  kHitStop,  // cell reported, beam ends
  kStop,     // beam ends, cell not reported
};

// 2000 for allelopathic_harvest, 1000 for every other kind.
int default_episode_length(std::string_view kind);

// Everything needed to build a substrate: the common header of a substrate
// spec file plus the kind-specific parameter block.
struct SubstrateSpec {
  std::string id;
  std::string kind;
  int players = 0;
  int episode_length = 1000;
  AsciiMap map;
  ObservationWindow window;
  nlohmann::json params;

  static SubstrateSpec from_json(const nlohmann::json& j, const AsciiMap& map);
};

// Deterministic gridworld engine shared by every substrate.
//
// A step resolves in a fixed order:
//   1. removed avatars whose timer expired respawn (ascending player index);
//   2. movement and turning actions, ascending player index. Moves are applied
//      one avatar at a time, so when two avatars target the same cell the lower
//      index gets there first and the other bumps;
//   3. substrate actions (beams, grab, plant), ascending player index;
//   4. world update (stochastic item dynamics, timers, continuous rewards);
//   5. the step counter increments.
// Removed and frozen avatars' actions are ignored.
class Substrate {
 public:
  struct StepResult {
    std::vector<double> rewards;
    std::size_t first_event = 0;  // index into state().event_log
    bool done = false;
  };

  virtual ~Substrate() = default;
  Substrate(const Substrate&) = delete;
  Substrate& operator=(const Substrate&) = delete;

  const std::string& id() const { return spec_.id; }
  const std::string& kind() const { return spec_.kind; }
  const SubstrateSpec& spec() const { return spec_; }
  int num_players() const { return state_.num_players(); }
  int episode_length() const { return state_.episode_length; }
  bool done() const { return state_.step >= state_.episode_length; }
  const ObservationWindow& window() const { return spec_.window; }

  virtual int num_actions() const { return action::kFirstSubstrateAction; }
  virtual std::string action_name(int action) const;

  const GridState& state() const { return state_; }
  // Direct state access for tests and tools that need to stage a situation.
  GridState& mutable_state() { return state_; }

  // Advances one step. `joint_action` holds one action per player; entries
  // for removed or frozen players are ignored but must still be legal ids.
  StepResult step(std::span<const int> joint_action);

  // Events emitted during the most recent step.
  std::span<const Event> last_events() const;
  std::span<const double> last_rewards() const { return last_rewards_; }
  std::span<const double> returns() const { return returns_; }

  Observation observe(int player) const;
  // Full map, viewer facing north.
  Image render_world() const;

  // Traces `player`'s beam of the given kind. Emits beam_fired (or
  // beam_blocked when on cooldown) and returns what was hit. Effects on the
  // hits are applied by the caller.
  std::vector<BeamHit> cast_beam(int player, BeamKind kind);

  std::vector<std::uint8_t> serialize() const;
  std::uint64_t digest() const;

  // Avatar positions are indexed via occupancy; keep it in sync.
  void place_avatar(int player, Position p);
  void remove_avatar_from_grid(int player);

  std::optional<BeamSpec> beam_spec(BeamKind kind) const;

  // True when `player` may stand on p, ignoring other avatars.
  bool can_enter(int player, Position p) const { return state_.in_bounds(p) && is_passable(player, p); }
  // False when the avatar is stuck in place (e.g. on opposing paint).
  bool can_move_now(int player) const { return can_move(player); }

 protected:
  Substrate(SubstrateSpec spec, std::uint64_t seed);

  // Must be called once at the end of the most-derived constructor.
  void initialize();

  // Hooks ------------------------------------------------------------------
  // Returns true when the tag was consumed. Base handles wall/floor/spawn/river.
  virtual bool init_cell(Position, std::string_view) { return false; }
  virtual void on_initialized() {}
  virtual int spawn_group(int /*player*/) const { return 0; }
  virtual void on_avatar_placed(int /*player*/) {}
  virtual bool can_move(int /*player*/) const { return true; }
  virtual bool is_passable(int player, Position p) const;
  virtual void on_blocked(int /*player*/, Position /*target*/) {}
  virtual void on_enter(int /*player*/, Position) {}
  virtual void on_action(int /*player*/, int /*action*/) {}
  virtual void on_removed(int /*player*/) {}
  virtual void world_update() {}
  virtual BeamCell beam_cell(BeamKind, int /*shooter*/, Position) const { return BeamCell::kPass; }
  // False makes the target transparent to the beam.
  virtual bool beam_hits_avatar(BeamKind, int /*shooter*/, int /*target*/) const { return true; }
  virtual CellLook cell_look(Position p) const;
  virtual AvatarLook avatar_look(int player) const;
  virtual std::optional<Inventory> observed_inventory(int /*player*/) const { return std::nullopt; }
  virtual void serialize_extra(ByteWriter&) const {}

  // Helpers for derived mechanics -------------------------------------------
  Event& emit(std::string_view name, int actor = -1, int target = -1, std::optional<Position> pos = std::nullopt);
  // Pays `amount` to `player` and records `cause` with a "reward" payload.
  void reward(int player, double amount, Event cause);
  // Takes the avatar off the grid for `duration` steps (or permanently).
  void remove_player(int player, int duration);
  Event make_event(std::string_view name, int actor = -1, int target = -1,
                   std::optional<Position> pos = std::nullopt) const;

  Avatar& avatar(int player) { return state_.avatars[player]; }
  const Avatar& avatar(int player) const { return state_.avatars[player]; }
  int spawn_group_count() const { return static_cast<int>(spawn_groups_.size()); }
  const std::vector<Position>& spawn_points(int group) const { return spawn_groups_.at(group); }
  void set_beam(BeamKind kind, BeamSpec spec) { beams_[static_cast<int>(kind)] = spec; }

  SubstrateSpec spec_;
  GridState state_;

 private:
  bool try_spawn(int player);
  void respawn_due();
  void apply_movement(int player, int action);
  void write_state(ByteWriter& w) const;

  std::vector<std::vector<Position>> spawn_groups_;
  std::vector<std::size_t> spawn_cursor_;
  std::vector<double> step_rewards_;
  std::vector<double> last_rewards_;
  std::vector<double> returns_;
  std::size_t last_first_event_ = 0;
  std::array<std::optional<BeamSpec>, kBeamKindCount> beams_{};
};

}  // namespace socialgrid

#endif  // SOCIALGRID_CORE_SUBSTRATE_HPP_
