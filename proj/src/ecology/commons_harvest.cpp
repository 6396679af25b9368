#include "socialgrid/ecology/commons_harvest.hpp"

#include "socialgrid/ecology/rates.hpp"

namespace socialgrid {

CommonsHarvestSpec CommonsHarvestSpec::from_json(const nlohmann::json& params) {
  CommonsHarvestSpec s;
  s.zap = beam_from_json(params, "zap", s.zap);
  s.zap_removal_steps = params.value("zap_removal_steps", s.zap_removal_steps);
  s.apple_reward = params.value("apple_reward", s.apple_reward);
  return s;
}

CommonsHarvest::CommonsHarvest(SubstrateSpec spec, std::uint64_t seed)
    : Substrate(std::move(spec), seed), cspec_(CommonsHarvestSpec::from_json(spec_.params)) {
  apple_cell_mask_.assign(state_.terrain.size(), 0);
  set_beam(BeamKind::kZap, cspec_.zap);
  initialize();
}

std::string CommonsHarvest::action_name(int a) const { return a == kZap ? "zap" : Substrate::action_name(a); }

bool CommonsHarvest::init_cell(Position p, std::string_view tag) {
  if (tag != "apple" && tag != "apple_empty") return false;
  apple_cells_.push_back(p);
  apple_cell_mask_[state_.index(p)] = 1;
  if (tag == "apple") state_.item_at(p) = Item{ItemKind::kApple, 0, 0};
  return true;
}

bool CommonsHarvest::is_apple_cell(Position p) const {
  return state_.in_bounds(p) && apple_cell_mask_[state_.index(p)] != 0;
}

int CommonsHarvest::apples_near(Position p) const {
  int n = 0;
  for (const Position d : kAppleNeighborhood) {
    const Position q = p + d;
    if (state_.in_bounds(q) && state_.item_at(q).kind == ItemKind::kApple) ++n;
  }
  return n;
}

int CommonsHarvest::apple_count() const {
  int n = 0;
  for (const Position p : apple_cells_) n += state_.item_at(p).kind == ItemKind::kApple ? 1 : 0;
  return n;
}

void CommonsHarvest::on_enter(int player, Position p) {
  auto& item = state_.item_at(p);
  if (item.kind != ItemKind::kApple) return;
  item = Item{};
  auto e = make_event(events::kAppleEaten, player, -1, p);
  e.with("neighbors", apples_near(p));
  reward(player, cspec_.apple_reward, std::move(e));
}

void CommonsHarvest::on_action(int player, int a) {
  if (a != kZap) return;
  for (const auto& h : cast_beam(player, BeamKind::kZap)) {
    if (h.kind != BeamHit::Kind::kAvatar) continue;
    emit(events::kPlayerZapped, player, h.player, h.position);
    remove_player(h.player, cspec_.zap_removal_steps);
    emit(events::kPlayerRemoved, player, h.player, h.position).with("duration", cspec_.zap_removal_steps);
  }
}

void CommonsHarvest::world_update() {
  // Neighbor counts are taken before any cell regrows this step.
  std::vector<int> grow;
  for (const Position p : apple_cells_) {
    const int idx = state_.index(p);
    if (!state_.items[idx].empty() || state_.occupant[idx] != -1) continue;
    const double prob = regrowth_probability(apples_near(p));
    if (prob > 0.0 && state_.rng.bernoulli(prob, Stream::kAppleRegrowth, state_.step, idx)) grow.push_back(idx);
  }
  for (int idx : grow) state_.items[idx] = Item{ItemKind::kApple, 0, 0};
}

CellLook CommonsHarvest::cell_look(Position p) const {
  CellLook look = Substrate::cell_look(p);
  if (state_.item_at(p).kind == ItemKind::kApple) {
    look.shape = Shape::kDiamond;
    look.foreground = palette::kApple;
  } else if (is_apple_cell(p)) {
    look.shape = Shape::kSmallSquare;
    look.foreground = Color{40, 56, 36};
  }
  return look;
}

}  // namespace socialgrid
