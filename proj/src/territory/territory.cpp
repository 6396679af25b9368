#include "socialgrid/territory/territory.hpp"

namespace socialgrid {

TerritorySpec TerritorySpec::from_json(const nlohmann::json& params) {
  TerritorySpec s;
  s.zap = beam_from_json(params, "zap", s.zap);
  s.claim = beam_from_json(params, "claim", s.claim);
  s.activation_delay = params.value("activation_delay", s.activation_delay);
  s.reward_rate = params.value("reward_rate", s.reward_rate);
  s.reward_amount = params.value("reward_amount", s.reward_amount);
  if (s.reward_rate < 0.0 || s.reward_rate > 1.0) throw ConfigError("reward_rate must lie in [0, 1]");
  return s;
}

Territory::Territory(SubstrateSpec spec, std::uint64_t seed)
    : Substrate(std::move(spec), seed), tspec_(TerritorySpec::from_json(spec_.params)) {
  wall_index_.assign(state_.terrain.size(), -1);
  set_beam(BeamKind::kZap, tspec_.zap);
  set_beam(BeamKind::kClaim, tspec_.claim);
  initialize();
}

std::string Territory::action_name(int a) const {
  if (a == kZap) return "zap";
  if (a == kClaim) return "claim";
  return Substrate::action_name(a);
}

bool Territory::init_cell(Position p, std::string_view tag) {
  if (tag != "resource_wall") return false;
  wall_index_[state_.index(p)] = static_cast<int>(walls_.size());
  walls_.push_back(ResourceWall{p, std::nullopt, std::nullopt, 0});
  announced_.push_back(0);
  state_.item_at(p) = Item{ItemKind::kResourceWall, 0, 0};
  return true;
}

int Territory::resource_at(Position p) const { return state_.in_bounds(p) ? wall_index_[state_.index(p)] : -1; }

bool Territory::is_active(const ResourceWall& w) const {
  return !w.destroyed() && w.owner && w.claimed_at && state_.step >= *w.claimed_at + tspec_.activation_delay;
}

int Territory::destroyed_count() const {
  int n = 0;
  for (const auto& w : walls_) n += w.destroyed() ? 1 : 0;
  return n;
}

bool Territory::is_passable(int player, Position p) const {
  const int w = wall_index_[state_.index(p)];
  if (w >= 0 && !walls_[w].destroyed()) return false;
  return Substrate::is_passable(player, p);
}

void Territory::claim(int player, int wall) {
  auto& w = walls_[wall];
  if (w.destroyed() || w.owner == player) return;
  const int previous = w.owner.value_or(-1);
  w.owner = player;
  w.claimed_at = state_.step;
  announced_[wall] = 0;
  emit(events::kResourceClaimed, player, previous, w.cell).with("previous_owner", previous);
}

void Territory::damage(int zapper, int wall) {
  auto& w = walls_[wall];
  if (w.destroyed()) return;
  ++w.damage;
  if (!w.destroyed()) {
    emit(events::kResourceDamaged, zapper, w.owner.value_or(-1), w.cell).with("damage", w.damage);
    return;
  }
  const int owner = w.owner.value_or(-1);
  w.owner.reset();
  w.claimed_at.reset();
  state_.item_at(w.cell) = Item{};
  emit(events::kResourceDestroyed, zapper, owner, w.cell);
}

void Territory::on_blocked(int player, Position target) {
  const int w = resource_at(target);
  if (w >= 0) claim(player, w);
}

void Territory::on_action(int player, int a) {
  if (a == kClaim) {
    for (const auto& h : cast_beam(player, BeamKind::kClaim)) {
      if (h.kind == BeamHit::Kind::kCell) claim(player, resource_at(h.position));
    }
  } else if (a == kZap) {
    for (const auto& h : cast_beam(player, BeamKind::kZap)) {
      if (h.kind == BeamHit::Kind::kAvatar) {
        emit(events::kPlayerZapped, player, h.player, h.position);
        remove_player(h.player, kPermanentRemoval);
        emit(events::kPlayerRemovedPermanent, player, h.player, h.position);
      } else {
        damage(player, resource_at(h.position));
      }
    }
  }
}

void Territory::on_removed(int player) {
  if (avatar(player).removed_until != kPermanentRemoval) return;
  for (auto& w : walls_) {
    if (w.owner != player) continue;
    w.owner.reset();
    w.claimed_at.reset();
  }
}

void Territory::world_update() {
  for (std::size_t i = 0; i < walls_.size(); ++i) {
    const auto& w = walls_[i];
    if (!is_active(w)) continue;
    const int owner = *w.owner;
    if (!announced_[i]) {
      announced_[i] = 1;
      emit(events::kResourceActivated, owner, -1, w.cell);
    }
    if (state_.rng.bernoulli(tspec_.reward_rate, Stream::kTerritoryReward, state_.step, state_.index(w.cell))) {
      reward(owner, tspec_.reward_amount, make_event(events::kResourceReward, owner, -1, w.cell));
    }
  }
}

BeamCell Territory::beam_cell(BeamKind kind, int, Position p) const {
  const int w = resource_at(p);
  if (w < 0 || walls_[w].destroyed()) return BeamCell::kPass;
  return kind == BeamKind::kClaim ? BeamCell::kHitPass : BeamCell::kHitStop;
}

CellLook Territory::cell_look(Position p) const {
  CellLook look = Substrate::cell_look(p);
  const int w = resource_at(p);
  if (w < 0) return look;
  const auto& wall = walls_[w];
  if (wall.destroyed()) {
    look.shape = Shape::kCross;
    look.foreground = Color{60, 50, 40};
    return look;
  }
  look.shape = Shape::kFill;
  look.foreground = wall.owner ? palette::player_color(avatar(*wall.owner).color_tag) : palette::kGray;
  if (wall.damage > 0) {
    look.overlay = Shape::kCross;
    look.overlay_color = palette::kOutside;
  } else if (is_active(wall)) {
    look.overlay = Shape::kPlus;
    look.overlay_color = palette::kWhite;
  }
  return look;
}

void Territory::serialize_extra(ByteWriter& w) const {
  for (const auto& wall : walls_) {
    w.i32(wall.owner.value_or(-1));
    w.i32(wall.claimed_at.value_or(-1));
    w.i32(wall.damage);
  }
}

}  // namespace socialgrid
