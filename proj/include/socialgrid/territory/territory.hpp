#ifndef SOCIALGRID_TERRITORY_TERRITORY_HPP_
#define SOCIALGRID_TERRITORY_TERRITORY_HPP_

#include <optional>
#include <vector>

#include "socialgrid/core/substrate.hpp"

namespace socialgrid {

struct ResourceWall {
  Position cell;
  std::optional<int> owner;
  std::optional<int> claimed_at;
  int damage = 0;  // two zaps destroy the wall

  bool destroyed() const { return damage >= 2; }
};

struct TerritorySpec {
  BeamSpec zap{3, 2};
  BeamSpec claim{2, 0};
  int activation_delay = 100;
  double reward_rate = 0.01;
  double reward_amount = 1.0;

  static TerritorySpec from_json(const nlohmann::json& params);
};

// Claimable resource walls that pay their owner once active.
// Actions: 0-6 movement, 7 zap, 8 claim.
class Territory final : public Substrate {
 public:
  static constexpr int kZap = action::kFirstSubstrateAction;
  static constexpr int kClaim = kZap + 1;

  Territory(SubstrateSpec spec, std::uint64_t seed);

  int num_actions() const override { return kClaim + 1; }
  std::string action_name(int a) const override;

  const std::vector<ResourceWall>& resources() const { return walls_; }
  // Index into resources() for the wall at p, or -1.
  int resource_at(Position p) const;
  bool is_active(const ResourceWall& w) const;
  int destroyed_count() const;

  void claim(int player, int wall);
  void damage(int zapper, int wall);

 protected:
  bool init_cell(Position p, std::string_view tag) override;
  bool is_passable(int player, Position p) const override;
  void on_blocked(int player, Position target) override;
  void on_action(int player, int action) override;
  void on_removed(int player) override;
  void world_update() override;
  BeamCell beam_cell(BeamKind kind, int shooter, Position p) const override;
  CellLook cell_look(Position p) const override;
  void serialize_extra(ByteWriter& w) const override;

 private:
  TerritorySpec tspec_;
  std::vector<ResourceWall> walls_;
  std::vector<int> wall_index_;  // per cell
  std::vector<std::uint8_t> announced_;  // activation event sent for the current claim
};

}  // namespace socialgrid

#endif  // SOCIALGRID_TERRITORY_TERRITORY_HPP_
