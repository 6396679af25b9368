#include "socialgrid/ecology/clean_up.hpp"

#include <algorithm>

namespace socialgrid {

CleanUpSpec CleanUpSpec::from_json(const nlohmann::json& params) {
  CleanUpSpec s;
  s.zap = beam_from_json(params, "zap", s.zap);
  s.clean = beam_from_json(params, "clean", s.clean);
  s.zap_removal_steps = params.value("zap_removal_steps", s.zap_removal_steps);
  s.apple_reward = params.value("apple_reward", s.apple_reward);
  if (params.contains("river")) {
    const auto& r = params.at("river");
    s.river.pollution = r.value("initial_pollution", s.river.pollution);
    s.river.accumulation_rate = r.value("accumulation_rate", s.river.accumulation_rate);
    s.river.clean_amount = r.value("clean_amount", s.river.clean_amount);
    s.river.threshold = r.value("threshold", s.river.threshold);
    s.river.max_spawn_probability = r.value("max_spawn_probability", s.river.max_spawn_probability);
  }
  if (s.river.threshold < 0.0 || s.river.threshold > 1.0) throw ConfigError("river threshold must lie in [0, 1]");
  return s;
}

CleanUp::CleanUp(SubstrateSpec spec, std::uint64_t seed)
    : Substrate(std::move(spec), seed), cspec_(CleanUpSpec::from_json(spec_.params)), river_(cspec_.river) {
  set_beam(BeamKind::kZap, cspec_.zap);
  set_beam(BeamKind::kClean, cspec_.clean);
  initialize();
}

std::string CleanUp::action_name(int a) const {
  if (a == kZap) return "zap";
  if (a == kClean) return "clean";
  return Substrate::action_name(a);
}

bool CleanUp::init_cell(Position p, std::string_view tag) {
  if (tag != "orchard" && tag != "apple") return false;
  orchard_cells_.push_back(p);
  if (tag == "apple") state_.item_at(p) = Item{ItemKind::kApple, 0, 0};
  return true;
}

void CleanUp::on_enter(int player, Position p) {
  auto& item = state_.item_at(p);
  if (item.kind != ItemKind::kApple) return;
  item = Item{};
  reward(player, cspec_.apple_reward, make_event(events::kAppleEaten, player, -1, p));
}

void CleanUp::on_action(int player, int a) {
  if (a == kZap) {
    for (const auto& h : cast_beam(player, BeamKind::kZap)) {
      if (h.kind != BeamHit::Kind::kAvatar) continue;
      emit(events::kPlayerZapped, player, h.player, h.position);
      remove_player(h.player, cspec_.zap_removal_steps);
      emit(events::kPlayerRemoved, player, h.player, h.position).with("duration", cspec_.zap_removal_steps);
    }
  } else if (a == kClean) {
    const auto hits = cast_beam(player, BeamKind::kClean);
    if (hits.empty()) return;
    ++clean_hits_;
    emit(events::kPlayerCleaned, player, -1, avatar(player).position).with("cells", static_cast<double>(hits.size()));
  }
}

void CleanUp::world_update() {
  river_ = cleanup_step(river_, clean_hits_);
  clean_hits_ = 0;
  emit(events::kPollutionLevel).with("pollution", river_.pollution);
  const double prob = apple_spawn_probability(river_);
  if (prob <= 0.0) return;
  for (const Position p : orchard_cells_) {
    const int idx = state_.index(p);
    if (!state_.items[idx].empty() || state_.occupant[idx] != -1) continue;
    if (state_.rng.bernoulli(prob, Stream::kOrchardSpawn, state_.step, idx)) state_.items[idx] = Item{ItemKind::kApple, 0, 0};
  }
}

BeamCell CleanUp::beam_cell(BeamKind kind, int, Position p) const {
  if (kind == BeamKind::kClean && state_.terrain_at(p) == Terrain::kRiver) return BeamCell::kHitPass;
  return BeamCell::kPass;
}

bool CleanUp::beam_hits_avatar(BeamKind kind, int, int) const { return kind != BeamKind::kClean; }

CellLook CleanUp::cell_look(Position p) const {
  CellLook look = Substrate::cell_look(p);
  if (state_.terrain_at(p) == Terrain::kRiver) {
    const double t = river_.threshold > 0.0 ? std::min(1.0, river_.pollution / river_.threshold) : 1.0;
    look.background = palette::lerp(palette::kBlue, Color{110, 90, 40}, t);
  } else if (state_.item_at(p).kind == ItemKind::kApple) {
    look.shape = Shape::kDiamond;
    look.foreground = palette::kApple;
  }
  return look;
}

void CleanUp::serialize_extra(ByteWriter& w) const { w.f64(river_.pollution); }

}  // namespace socialgrid
