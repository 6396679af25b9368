#ifndef SOCIALGRID_CHEMISTRY_CHEMISTRY_HPP_
#define SOCIALGRID_CHEMISTRY_CHEMISTRY_HPP_

#include <vector>

#include "socialgrid/chemistry/reaction_graph.hpp"
#include "socialgrid/core/substrate.hpp"

namespace socialgrid {

// Molecules lie on cells or are carried, one per player. Reactions fire
// stochastically when their reactants sit within the neighborhood radius of
// each other. Actions: 0-6 movement, 7 grab or drop in front.
class Chemistry final : public Substrate {
 public:
  static constexpr int kGrabDrop = action::kFirstSubstrateAction;

  Chemistry(SubstrateSpec spec, std::uint64_t seed);

  int num_actions() const override { return kGrabDrop + 1; }
  std::string action_name(int a) const override;

  const ReactionGraph& graph() const { return graph_; }
  int radius() const { return radius_; }
  // Molecules per species, on the ground and carried.
  std::vector<int> species_counts() const;

  // One pass of reaction firing over the whole map.
  void react_step();

 protected:
  bool init_cell(Position p, std::string_view tag) override;
  void on_action(int player, int action) override;
  void world_update() override;
  CellLook cell_look(Position p) const override;
  AvatarLook avatar_look(int player) const override;

 private:
  ReactionGraph graph_;
  int radius_ = 1;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_CHEMISTRY_CHEMISTRY_HPP_
