#include "socialgrid/matrix/matrix_substrate.hpp"

#include <numeric>
#include <string>

namespace socialgrid {

namespace {

std::vector<std::vector<double>> read_matrix(const nlohmann::json& j) {
  return j.get<std::vector<std::vector<double>>>();
}

}  // namespace

MatrixSubstrateSpec MatrixSubstrateSpec::from_json(const nlohmann::json& params) {
  MatrixSubstrateSpec s;
  const auto& m = params.at("matrix");
  s.k = m.at("k").get<int>();
  if (m.value("symmetric", true)) {
    s.matrix = PayoffMatrix::symmetric(read_matrix(m.at("row")));
  } else {
    s.matrix = PayoffMatrix::asymmetric(read_matrix(m.at("row")), read_matrix(m.at("col")));
  }
  if (static_cast<int>(s.matrix.k()) != s.k) throw ConfigError("matrix size does not match k");
  s.initial_inventory = params.value("initial_inventory", std::vector<double>(s.k, 0.0));
  if (static_cast<int>(s.initial_inventory.size()) != s.k) throw ConfigError("initial_inventory must have k entries");
  s.removal_steps = params.value("removal_steps", 200);
  s.winner_inventory_reset = params.value("winner_inventory_reset", false);
  const auto roles = params.value("role_assignment", std::string("none"));
  if (roles == "none") s.role_assignment = RoleAssignment::kNone;
  else if (roles == "fixed_row_column") s.role_assignment = RoleAssignment::kFixedRowColumn;
  else throw ConfigError("unknown role_assignment '" + roles + "'");
  s.resource_respawn_steps = params.value("resource_respawn_steps", 100);
  s.interaction_beam = beam_from_json(params, "interaction_beam", s.interaction_beam);
  s.uniform_avatar_colors = params.value("uniform_avatar_colors", false);
  return s;
}

MatrixSubstrate::MatrixSubstrate(SubstrateSpec spec, std::uint64_t seed)
    : Substrate(std::move(spec), seed), mspec_(MatrixSubstrateSpec::from_json(spec_.params)) {
  const auto cells = state_.terrain.size();
  resource_type_.assign(cells, -1);
  respawn_at_.assign(cells, -1);
  set_beam(BeamKind::kInteract, mspec_.interaction_beam);
  initialize();
}

std::string MatrixSubstrate::action_name(int a) const {
  return a == kInteract ? "interact" : Substrate::action_name(a);
}

bool MatrixSubstrate::init_cell(Position p, std::string_view tag) {
  if (!tag.starts_with("resource:")) return false;
  const int k = std::stoi(std::string(tag.substr(9)));
  if (k < 0 || k >= mspec_.k) throw ConfigError(spec_.id + ": resource index out of range in map");
  resource_type_[state_.index(p)] = k;
  resource_cells_.push_back(p);
  state_.item_at(p) = Item{ItemKind::kResource, static_cast<std::uint8_t>(k), 0};
  return true;
}

void MatrixSubstrate::on_initialized() {
  const int n = num_players();
  row_role_.assign(n, true);
  if (mspec_.role_assignment == RoleAssignment::kFixedRowColumn) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n; i > 1; --i) {
      const auto j = static_cast<int>(state_.rng.below(i, Stream::kRoleShuffle, 0, i));
      std::swap(order[i - 1], order[j]);
    }
    for (int i = 0; i < n; ++i) row_role_[order[i]] = i < n / 2;
  }
  for (int p = 0; p < n; ++p) {
    avatar(p).inventory = initial_inventory();
    if (mspec_.uniform_avatar_colors) avatar(p).color_tag = 0;
  }
}

Inventory MatrixSubstrate::initial_inventory() const { return Inventory(mspec_.initial_inventory); }

bool MatrixSubstrate::is_row_player(int player) const { return row_role_[player]; }

int MatrixSubstrate::resource_type_at(Position p) const { return resource_type_[state_.index(p)]; }

void MatrixSubstrate::on_avatar_placed(int player) {
  if (avatar(player).inventory.size() != static_cast<std::size_t>(mspec_.k)) {
    avatar(player).inventory = initial_inventory();
  }
}

void MatrixSubstrate::on_enter(int player, Position p) {
  auto& item = state_.item_at(p);
  if (item.kind != ItemKind::kResource) return;
  const int k = item.variant;
  avatar(player).inventory.add(static_cast<std::size_t>(k));
  item = Item{};
  respawn_at_[state_.index(p)] = state_.step + mspec_.resource_respawn_steps;
  emit(events::kResourceCollected, player, -1, p).with("resource", k);
}

void MatrixSubstrate::on_action(int player, int a) {
  if (a != kInteract) return;
  const auto hits = cast_beam(player, BeamKind::kInteract);
  for (const auto& h : hits) {
    if (h.kind == BeamHit::Kind::kAvatar) {
      apply_encounter(player, h.player);
      break;
    }
  }
}

void MatrixSubstrate::apply_encounter(int zapper, int zapped) {
  if (avatar(zapper).removed() || avatar(zapped).removed()) return;
  int row = zapper;
  int col = zapped;
  if (mspec_.role_assignment == RoleAssignment::kFixedRowColumn) {
    if (row_role_[zapper] == row_role_[zapped]) {
      emit(events::kNoEffect, zapper, zapped, avatar(zapped).position).with("same_role", 1);
      return;
    }
    if (!row_role_[zapper]) std::swap(row, col);
  }
  const auto payoff = resolve_interaction(avatar(row).inventory, avatar(col).inventory, mspec_.matrix);
  if (!payoff) {
    emit(events::kNoEffect, zapper, zapped, avatar(zapped).position).with("empty_inventory", 1);
    return;
  }
  const auto v_row = *mixed_strategy(avatar(row).inventory);
  const auto v_col = *mixed_strategy(avatar(col).inventory);
  const double r_zapper = row == zapper ? payoff->row : payoff->col;
  const double r_zapped = row == zapper ? payoff->col : payoff->row;

  auto summary = make_event(events::kInteraction, zapper, zapped, avatar(zapped).position);
  summary.with("zapper_reward", r_zapper).with("zapped_reward", r_zapped).with("row_player", row);
  state_.event_log.push_back(std::move(summary));

  auto outcome = [&](int self, int partner, double r, const std::vector<double>& own, const std::vector<double>& other) {
    auto e = make_event(events::kInteractionOutcome, self, partner, avatar(self).position);
    e.with("own_choice", dominant_choice(own)).with("partner_choice", dominant_choice(other));
    for (std::size_t i = 0; i < other.size(); ++i) e.with("partner_weight_" + std::to_string(i), other[i]);
    e.with("zapper", self == zapper ? 1 : 0);
    reward(self, r, std::move(e));
  };
  outcome(row, col, payoff->row, v_row, v_col);
  outcome(col, row, payoff->col, v_col, v_row);

  const int loser = r_zapped <= r_zapper ? zapped : zapper;
  const int winner = loser == zapped ? zapper : zapped;
  avatar(loser).inventory = initial_inventory();
  if (mspec_.winner_inventory_reset) avatar(winner).inventory = initial_inventory();
  const Position where = avatar(loser).position;
  remove_player(loser, mspec_.removal_steps);
  emit(events::kPlayerRemoved, winner, loser, where).with("duration", mspec_.removal_steps);
}

void MatrixSubstrate::world_update() {
  for (const Position p : resource_cells_) {
    const int idx = state_.index(p);
    if (respawn_at_[idx] < 0 || respawn_at_[idx] > state_.step + 1) continue;
    // Resources reappear once their cell is free of avatars.
    if (state_.occupant[idx] != -1 || !state_.items[idx].empty()) continue;
    state_.items[idx] = Item{ItemKind::kResource, static_cast<std::uint8_t>(resource_type_[idx]), 0};
    respawn_at_[idx] = -1;
  }
}

CellLook MatrixSubstrate::cell_look(Position p) const {
  CellLook look = Substrate::cell_look(p);
  const auto& item = state_.item_at(p);
  if (item.kind == ItemKind::kResource) {
    look.shape = Shape::kDiamond;
    look.foreground = palette::resource_color(item.variant);
  }
  return look;
}

AvatarLook MatrixSubstrate::avatar_look(int player) const {
  if (mspec_.uniform_avatar_colors) return {palette::kGray, std::nullopt};
  if (mspec_.role_assignment == RoleAssignment::kFixedRowColumn) {
    return {row_role_[player] ? palette::kBlue : Color{245, 150, 40}, std::nullopt};
  }
  return Substrate::avatar_look(player);
}

std::optional<Inventory> MatrixSubstrate::observed_inventory(int player) const { return avatar(player).inventory; }

void MatrixSubstrate::serialize_extra(ByteWriter& w) const {
  for (int t : respawn_at_) w.i32(t);
  for (bool r : row_role_) w.u8(r ? 1 : 0);
}

}  // namespace socialgrid
