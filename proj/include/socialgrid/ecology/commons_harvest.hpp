#ifndef SOCIALGRID_ECOLOGY_COMMONS_HARVEST_HPP_
#define SOCIALGRID_ECOLOGY_COMMONS_HARVEST_HPP_

#include <vector>

#include "socialgrid/core/substrate.hpp"

namespace socialgrid {

struct CommonsHarvestSpec {
  BeamSpec zap{3, 4};
  int zap_removal_steps = 25;
  double apple_reward = 1.0;

  static CommonsHarvestSpec from_json(const nlohmann::json& params);
};

// Apples regrow at apple cells with a probability set by the number of
// apples still standing within radius 2. Actions: 0-6 movement, 7 zap.
class CommonsHarvest final : public Substrate {
 public:
  static constexpr int kZap = action::kFirstSubstrateAction;

  CommonsHarvest(SubstrateSpec spec, std::uint64_t seed);

  int num_actions() const override { return kZap + 1; }
  std::string action_name(int a) const override;

  const std::vector<Position>& apple_cells() const { return apple_cells_; }
  bool is_apple_cell(Position p) const;
  int apples_near(Position p) const;
  int apple_count() const;

 protected:
  bool init_cell(Position p, std::string_view tag) override;
  void on_enter(int player, Position p) override;
  void on_action(int player, int action) override;
  void world_update() override;
  CellLook cell_look(Position p) const override;

 private:
  CommonsHarvestSpec cspec_;
  std::vector<Position> apple_cells_;
  std::vector<std::uint8_t> apple_cell_mask_;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_ECOLOGY_COMMONS_HARVEST_HPP_
