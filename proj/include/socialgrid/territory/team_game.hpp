#ifndef SOCIALGRID_TERRITORY_TEAM_GAME_HPP_
#define SOCIALGRID_TERRITORY_TEAM_GAME_HPP_

#include <array>
#include <optional>
#include <vector>

#include "socialgrid/core/substrate.hpp"

namespace socialgrid {

enum class Ground : std::uint8_t { kNeutral = 0, kRed = 1, kBlue = 2 };

inline Ground ground_of(Team t) { return t == Team::kRed ? Ground::kRed : Ground::kBlue; }

enum class TeamMode { kCaptureTheFlag, kKingOfTheHill };

struct FlagState {
  Position home;
  int carrier = -1;
  std::optional<Position> on_ground;

  bool at_home() const { return carrier < 0 && !on_ground; }
};

enum class Indicator : std::uint8_t { kNeutral, kRed, kBlue, kPurple };

struct TeamGameSpec {
  TeamMode mode = TeamMode::kKingOfTheHill;
  BeamSpec zap{3, 2};
  int respawn_steps = 20;
  int initial_health = 2;
  double health_recovery = 0.05;
  double capture_reward = 25.0;
  double hill_reward = 1.0;
  int hill_threshold_percent = 80;

  static TeamGameSpec from_json(const std::string& kind, const nlohmann::json& params);
};

// Two-team painting games. The first half of the players form the red team,
// the rest blue. Actions: 0-6 movement, 7 zap (paints along the beam).
class TeamGame final : public Substrate {
 public:
  static constexpr int kZap = action::kFirstSubstrateAction;

  TeamGame(SubstrateSpec spec, std::uint64_t seed);

  int num_actions() const override { return kZap + 1; }
  std::string action_name(int a) const override;

  const TeamGameSpec& team_spec() const { return gspec_; }
  Team team_of(int player) const { return *avatar(player).team; }
  int team_size(Team t) const;
  Ground ground_at(Position p) const { return ground_[state_.index(p)]; }
  void paint(Position p, Ground g) { ground_[state_.index(p)] = g; }
  int max_health(int player) const;
  // True when `p` carries the other team's paint.
  bool opposing(int player, Position p) const;

  const std::vector<Position>& hill_cells() const { return hill_cells_; }
  // Team controlling the hill with the current paint, if any.
  std::optional<Team> hill_controller() const;

  const FlagState& flag(Team t) const { return flags_[static_cast<int>(t)]; }
  // Capture the flag: whose flags are home (purple = both). King of the
  // hill: the controlling team (purple = nobody).
  Indicator indicator() const;

 protected:
  bool init_cell(Position p, std::string_view tag) override;
  void on_initialized() override;
  int spawn_group(int player) const override;
  void on_avatar_placed(int player) override;
  bool can_move(int player) const override;
  bool is_passable(int player, Position p) const override;
  void on_enter(int player, Position p) override;
  void on_action(int player, int action) override;
  void on_removed(int player) override;
  void world_update() override;
  BeamCell beam_cell(BeamKind kind, int shooter, Position p) const override;
  bool beam_hits_avatar(BeamKind kind, int shooter, int target) const override;
  CellLook cell_look(Position p) const override;
  AvatarLook avatar_look(int player) const override;
  void serialize_extra(ByteWriter& w) const override;

 private:

  TeamGameSpec gspec_;
  std::vector<Ground> ground_;
  std::vector<std::uint8_t> hill_mask_;
  std::vector<std::uint8_t> indicator_mask_;
  std::vector<Position> hill_cells_;
  std::array<FlagState, 2> flags_{};
  std::array<bool, 2> has_flag_{false, false};
};

}  // namespace socialgrid

#endif  // SOCIALGRID_TERRITORY_TEAM_GAME_HPP_
