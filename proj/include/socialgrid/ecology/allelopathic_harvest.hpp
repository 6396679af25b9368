#ifndef SOCIALGRID_ECOLOGY_ALLELOPATHIC_HARVEST_HPP_
#define SOCIALGRID_ECOLOGY_ALLELOPATHIC_HARVEST_HPP_

#include <array>
#include <vector>

#include "socialgrid/core/substrate.hpp"

namespace socialgrid {

enum BerryColor : int { kBerryRed = 0, kBerryGreen = 1, kBerryBlue = 2, kNumBerryColors = 3 };

struct AllelopathicHarvestSpec {
  BeamSpec zap{3, 4};
  BeamSpec plant{3, 0};
  int freeze_steps = 25;
  int mark_steps = 50;
  int removal_steps = 25;
  double zap_penalty = -10.0;
  std::array<double, kNumBerryColors> berry_reward{2.0, 1.0, 1.0};

  static AllelopathicHarvestSpec from_json(const nlohmann::json& params);
};

// Berry plants of three colors ripen faster the more plants share their
// color. Actions: 0-6 movement, 7 zap, 8/9/10 plant red/green/blue.
class AllelopathicHarvest final : public Substrate {
 public:
  static constexpr int kZap = action::kFirstSubstrateAction;
  static constexpr int kPlantRed = kZap + 1;
  static constexpr int kWhite = kNumBerryColors;  // avatar color tag after eating

  AllelopathicHarvest(SubstrateSpec spec, std::uint64_t seed);

  int num_actions() const override { return kPlantRed + kNumBerryColors; }
  std::string action_name(int a) const override;

  const std::array<int, kNumBerryColors>& color_counts() const { return counts_; }
  int berry_total() const { return static_cast<int>(berry_cells_.size()); }
  const std::vector<Position>& berry_cells() const { return berry_cells_; }
  bool marked(int player) const;
  int avatar_color(int player) const { return avatar(player).color_tag; }

  // Applies one punishment zap from `zapper` to `target`.
  void zap_punish(int zapper, int target);

 protected:
  bool init_cell(Position p, std::string_view tag) override;
  void on_initialized() override;
  void on_enter(int player, Position p) override;
  void on_action(int player, int action) override;
  void world_update() override;
  BeamCell beam_cell(BeamKind kind, int shooter, Position p) const override;
  CellLook cell_look(Position p) const override;
  AvatarLook avatar_look(int player) const override;
  void serialize_extra(ByteWriter& w) const override;

 private:
  AllelopathicHarvestSpec aspec_;
  std::vector<Position> berry_cells_;
  std::array<int, kNumBerryColors> counts_{};
  std::vector<int> marked_until_;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_ECOLOGY_ALLELOPATHIC_HARVEST_HPP_
