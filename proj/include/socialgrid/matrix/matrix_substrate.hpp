#ifndef SOCIALGRID_MATRIX_MATRIX_SUBSTRATE_HPP_
#define SOCIALGRID_MATRIX_MATRIX_SUBSTRATE_HPP_

#include <vector>

#include "socialgrid/core/substrate.hpp"
#include "socialgrid/matrix/matrix_game.hpp"

namespace socialgrid {

enum class RoleAssignment { kNone, kFixedRowColumn };

struct MatrixSubstrateSpec {
  int k = 2;
  PayoffMatrix matrix;
  std::vector<double> initial_inventory;
  int removal_steps = 200;
  bool winner_inventory_reset = false;
  RoleAssignment role_assignment = RoleAssignment::kNone;
  int resource_respawn_steps = 100;
  BeamSpec interaction_beam{3, 2};
  bool uniform_avatar_colors = false;

  static MatrixSubstrateSpec from_json(const nlohmann::json& params);
};

// "* in the Matrix" substrates: walk over resources to fill an inventory,
// fire the interaction beam to play the matrix game against the first
// avatar hit.
//
// Actions: 0-6 movement, 7 interact.
class MatrixSubstrate final : public Substrate {
 public:
  static constexpr int kInteract = action::kFirstSubstrateAction;

  MatrixSubstrate(SubstrateSpec spec, std::uint64_t seed);

  int num_actions() const override { return kInteract + 1; }
  std::string action_name(int a) const override;

  const MatrixSubstrateSpec& matrix_spec() const { return mspec_; }
  // Row role in fixed-role games; true for everyone otherwise.
  bool is_row_player(int player) const;
  const std::vector<Position>& resource_cells() const { return resource_cells_; }
  int resource_type_at(Position p) const;

  // Resolves an encounter where `zapper`'s interaction beam hit `zapped`:
  // pays both players, removes the loser (the zapped player on ties) and
  // resets inventories as configured.
  void apply_encounter(int zapper, int zapped);

 protected:
  bool init_cell(Position p, std::string_view tag) override;
  void on_initialized() override;
  void on_avatar_placed(int player) override;
  void on_enter(int player, Position p) override;
  void on_action(int player, int action) override;
  void world_update() override;
  CellLook cell_look(Position p) const override;
  AvatarLook avatar_look(int player) const override;
  std::optional<Inventory> observed_inventory(int player) const override;
  void serialize_extra(ByteWriter& w) const override;

 private:
  Inventory initial_inventory() const;

  MatrixSubstrateSpec mspec_;
  std::vector<Position> resource_cells_;
  std::vector<int> resource_type_;   // per cell, -1 if not a resource cell
  std::vector<int> respawn_at_;      // per cell, -1 when not pending
  std::vector<bool> row_role_;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_MATRIX_MATRIX_SUBSTRATE_HPP_
