#ifndef SOCIALGRID_ECOLOGY_CLEAN_UP_HPP_
#define SOCIALGRID_ECOLOGY_CLEAN_UP_HPP_

#include <vector>

#include "socialgrid/core/substrate.hpp"
#include "socialgrid/ecology/rates.hpp"

namespace socialgrid {

struct CleanUpSpec {
  BeamSpec zap{3, 4};
  BeamSpec clean{2, 0};
  int zap_removal_steps = 50;
  double apple_reward = 1.0;
  RiverState river;

  static CleanUpSpec from_json(const nlohmann::json& params);
};

// Orchard apples spawn at a rate that falls as the river pollutes; cleaning
// beams that reach river cells remove pollution.
// Actions: 0-6 movement, 7 zap, 8 clean.
class CleanUp final : public Substrate {
 public:
  static constexpr int kZap = action::kFirstSubstrateAction;
  static constexpr int kClean = kZap + 1;

  CleanUp(SubstrateSpec spec, std::uint64_t seed);

  int num_actions() const override { return kClean + 1; }
  std::string action_name(int a) const override;

  const RiverState& river() const { return river_; }
  void set_pollution(double p) { river_.pollution = p; }
  const std::vector<Position>& orchard_cells() const { return orchard_cells_; }

 protected:
  bool init_cell(Position p, std::string_view tag) override;
  void on_enter(int player, Position p) override;
  void on_action(int player, int action) override;
  void world_update() override;
  BeamCell beam_cell(BeamKind kind, int shooter, Position p) const override;
  bool beam_hits_avatar(BeamKind kind, int shooter, int target) const override;
  CellLook cell_look(Position p) const override;
  void serialize_extra(ByteWriter& w) const override;

 private:
  CleanUpSpec cspec_;
  RiverState river_;
  std::vector<Position> orchard_cells_;
  int clean_hits_ = 0;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_ECOLOGY_CLEAN_UP_HPP_
