#include "socialgrid/ecology/allelopathic_harvest.hpp"

#include <algorithm>

#include "socialgrid/ecology/rates.hpp"

namespace socialgrid {

namespace {

constexpr std::uint8_t kRipe = 1;

Color berry_color(int c) {
  switch (c) {
    case kBerryRed: return palette::kRed;
    case kBerryGreen: return palette::kGreen;
    default: return palette::kBlue;
  }
}

}  // namespace

AllelopathicHarvestSpec AllelopathicHarvestSpec::from_json(const nlohmann::json& params) {
  AllelopathicHarvestSpec s;
  s.zap = beam_from_json(params, "zap", s.zap);
  s.plant = beam_from_json(params, "plant", s.plant);
  s.freeze_steps = params.value("freeze_steps", s.freeze_steps);
  s.mark_steps = params.value("mark_steps", s.mark_steps);
  s.removal_steps = params.value("removal_steps", s.removal_steps);
  s.zap_penalty = params.value("zap_penalty", s.zap_penalty);
  if (params.contains("berry_reward")) {
    const auto r = params.at("berry_reward").get<std::vector<double>>();
    if (r.size() != kNumBerryColors) throw ConfigError("berry_reward needs one value per color");
    std::copy(r.begin(), r.end(), s.berry_reward.begin());
  }
  return s;
}

AllelopathicHarvest::AllelopathicHarvest(SubstrateSpec spec, std::uint64_t seed)
    : Substrate(std::move(spec), seed), aspec_(AllelopathicHarvestSpec::from_json(spec_.params)) {
  set_beam(BeamKind::kZap, aspec_.zap);
  set_beam(BeamKind::kPlant, aspec_.plant);
  marked_until_.assign(spec_.players, 0);
  initialize();
}

std::string AllelopathicHarvest::action_name(int a) const {
  if (a == kZap) return "zap";
  if (a == kPlantRed + kBerryRed) return "plant_red";
  if (a == kPlantRed + kBerryGreen) return "plant_green";
  if (a == kPlantRed + kBerryBlue) return "plant_blue";
  return Substrate::action_name(a);
}

bool AllelopathicHarvest::init_cell(Position p, std::string_view tag) {
  if (tag != "berry") return false;
  berry_cells_.push_back(p);
  return true;
}

void AllelopathicHarvest::on_initialized() {
  // Equal thirds of each color over a seeded permutation of the plants.
  std::vector<Position> order = berry_cells_;
  for (std::size_t i = order.size(); i > 1; --i) {
    const auto j = state_.rng.below(i, Stream::kBerryColors, 0, i);
    std::swap(order[i - 1], order[j]);
  }
  counts_.fill(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int c = static_cast<int>(i % kNumBerryColors);
    state_.item_at(order[i]) = Item{ItemKind::kBerry, static_cast<std::uint8_t>(c), 0};
    ++counts_[c];
  }
  for (int p = 0; p < num_players(); ++p) avatar(p).color_tag = kWhite;
}

bool AllelopathicHarvest::marked(int player) const { return state_.step < marked_until_[player]; }

void AllelopathicHarvest::on_enter(int player, Position p) {
  auto& item = state_.item_at(p);
  if (item.kind != ItemKind::kBerry || (item.flags & kRipe) == 0) return;
  item.flags &= static_cast<std::uint8_t>(~kRipe);
  const int c = item.variant;
  auto e = make_event(events::kBerryEaten, player, -1, p);
  e.with("color", c);
  reward(player, aspec_.berry_reward[c], std::move(e));
  const int top = *std::max_element(counts_.begin(), counts_.end());
  const double p_white = berry_total() > 0 ? 1.0 - static_cast<double>(top) / berry_total() : 0.0;
  if (state_.rng.bernoulli(p_white, Stream::kBerryRecolor, state_.step, player)) avatar(player).color_tag = kWhite;
}

void AllelopathicHarvest::zap_punish(int zapper, int target) {
  const Position where = avatar(target).position;
  emit(events::kPlayerZapped, zapper, target, where);
  if (marked(target)) {
    marked_until_[target] = 0;
    remove_player(target, aspec_.removal_steps);
    auto e = make_event(events::kZapPenalty, zapper, target, where);
    reward(target, aspec_.zap_penalty, std::move(e));
    emit(events::kPlayerRemoved, zapper, target, where).with("duration", aspec_.removal_steps);
    return;
  }
  avatar(target).frozen_until = state_.step + aspec_.freeze_steps;
  marked_until_[target] = state_.step + aspec_.mark_steps;
  emit(events::kPlayerFrozen, zapper, target, where).with("duration", aspec_.freeze_steps);
}

void AllelopathicHarvest::on_action(int player, int a) {
  if (a == kZap) {
    for (const auto& h : cast_beam(player, BeamKind::kZap)) {
      if (h.kind == BeamHit::Kind::kAvatar) zap_punish(player, h.player);
    }
    return;
  }
  const int color = a - kPlantRed;
  if (color < 0 || color >= kNumBerryColors) return;
  for (const auto& h : cast_beam(player, BeamKind::kPlant)) {
    if (h.kind != BeamHit::Kind::kCell) continue;
    auto& item = state_.item_at(h.position);
    const int before = item.variant;
    avatar(player).color_tag = static_cast<std::uint8_t>(color);
    if (before == color) continue;
    --counts_[before];
    ++counts_[color];
    item.variant = static_cast<std::uint8_t>(color);
    emit(events::kBerryPlanted, player, -1, h.position).with("color", color).with("previous", before);
  }
}

void AllelopathicHarvest::world_update() {
  const auto counts = counts_;
  for (const Position p : berry_cells_) {
    auto& item = state_.item_at(p);
    if ((item.flags & kRipe) != 0) continue;
    const double prob = ripen_probability(counts[item.variant]);
    if (state_.rng.bernoulli(prob, Stream::kBerryRipen, state_.step, state_.index(p))) item.flags |= kRipe;
  }
}

BeamCell AllelopathicHarvest::beam_cell(BeamKind kind, int, Position p) const {
  if (kind != BeamKind::kPlant) return BeamCell::kPass;
  const auto& item = state_.item_at(p);
  if (item.kind == ItemKind::kBerry && (item.flags & kRipe) == 0) return BeamCell::kHitStop;
  return BeamCell::kPass;
}

CellLook AllelopathicHarvest::cell_look(Position p) const {
  CellLook look = Substrate::cell_look(p);
  const auto& item = state_.item_at(p);
  if (item.kind != ItemKind::kBerry) return look;
  const Color c = berry_color(item.variant);
  if ((item.flags & kRipe) != 0) {
    look.shape = Shape::kDiamond;
    look.foreground = c;
    look.overlay = Shape::kSmallSquare;
    look.overlay_color = palette::kWhite;
  } else {
    look.shape = Shape::kSmallSquare;
    look.foreground = palette::lerp(c, palette::kFloor, 0.5);
  }
  return look;
}

AvatarLook AllelopathicHarvest::avatar_look(int player) const {
  const int tag = avatar(player).color_tag;
  AvatarLook look{tag == kWhite ? palette::kWhite : berry_color(tag), std::nullopt};
  if (marked(player)) look.mark = palette::kPurple;
  return look;
}

void AllelopathicHarvest::serialize_extra(ByteWriter& w) const {
  for (int c : counts_) w.i32(c);
  for (int m : marked_until_) w.i32(m);
}

}  // namespace socialgrid
