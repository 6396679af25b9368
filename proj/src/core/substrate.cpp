#include "socialgrid/core/substrate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace socialgrid {

int default_episode_length(std::string_view kind) { return kind == "allelopathic_harvest" ? 2000 : 1000; }

SubstrateSpec SubstrateSpec::from_json(const nlohmann::json& j, const AsciiMap& map) {
  SubstrateSpec s;
  s.id = j.at("id").get<std::string>();
  s.kind = j.at("kind").get<std::string>();
  s.players = j.at("players").get<int>();
  s.episode_length = j.value("episode_length", default_episode_length(s.kind));
  if (j.contains("observation")) {
    const auto& o = j.at("observation");
    s.window.ahead = o.value("ahead", 9);
    s.window.behind = o.value("behind", 1);
    s.window.side = o.value("side", 5);
  }
  if (s.players < 1) throw ConfigError(s.id + ": players must be >= 1");
  if (s.episode_length < 1) throw ConfigError(s.id + ": episode_length must be >= 1");
  s.map = map;
  s.params = j;
  return s;
}

BeamSpec beam_from_json(const nlohmann::json& params, const char* key, BeamSpec fallback) {
  if (!params.contains(key)) return fallback;
  const auto& b = params.at(key);
  BeamSpec out{b.value("range", fallback.range), b.value("cooldown", fallback.cooldown)};
  if (out.range < 1 || out.cooldown < 0) throw ConfigError(std::string("invalid beam '") + key + "'");
  return out;
}

Substrate::Substrate(SubstrateSpec spec, std::uint64_t seed) : spec_(std::move(spec)) {
  state_.width = spec_.map.width();
  state_.height = spec_.map.height();
  state_.episode_length = spec_.episode_length;
  state_.rng = CounterRng(seed);
  const auto cells = static_cast<std::size_t>(state_.width) * state_.height;
  state_.terrain.assign(cells, Terrain::kFloor);
  state_.items.assign(cells, Item{});
  state_.occupant.assign(cells, -1);
  state_.avatars.resize(static_cast<std::size_t>(spec_.players));
  for (int i = 0; i < spec_.players; ++i) {
    state_.avatars[i].id = i;
    state_.avatars[i].color_tag = static_cast<std::uint8_t>(i);
  }
  step_rewards_.assign(spec_.players, 0.0);
  last_rewards_.assign(spec_.players, 0.0);
  returns_.assign(spec_.players, 0.0);
}

void Substrate::initialize() {
  for (int r = 0; r < state_.height; ++r) {
    for (int c = 0; c < state_.width; ++c) {
      const Position p{r, c};
      const std::string& tag = spec_.map.tag_at(p);
      if (init_cell(p, tag)) continue;
      if (tag == "wall") {
        state_.terrain[state_.index(p)] = Terrain::kWall;
      } else if (tag == "river") {
        state_.terrain[state_.index(p)] = Terrain::kRiver;
      } else if (tag == "floor") {
        // default terrain
      } else if (tag == "spawn" || tag.starts_with("spawn:")) {
        int group = 0;
        if (tag.starts_with("spawn:")) {
          const std::string name = tag.substr(6);
          if (name == "red") group = 0;
          else if (name == "blue") group = 1;
          else group = std::stoi(name);
        }
        if (static_cast<int>(spawn_groups_.size()) <= group) spawn_groups_.resize(group + 1);
        spawn_groups_[group].push_back(p);
      } else {
        throw ConfigError(spec_.id + ": unknown map tag '" + tag + "'");
      }
    }
  }
  if (spawn_groups_.empty()) throw ConfigError(spec_.id + ": map has no spawn points");
  // Seeded shuffle of each spawn list; respawns consume it round-robin.
  spawn_cursor_.assign(spawn_groups_.size(), 0);
  for (std::size_t g = 0; g < spawn_groups_.size(); ++g) {
    auto& pts = spawn_groups_[g];
    for (std::size_t i = pts.size(); i > 1; --i) {
      const auto j = state_.rng.below(i, Stream::kSpawnShuffle, g, i);
      std::swap(pts[i - 1], pts[j]);
    }
  }
  on_initialized();
  for (int p = 0; p < num_players(); ++p) {
    avatar(p).orientation = static_cast<Orientation>(state_.rng.below(4, Stream::kInitialFacing, 0, p));
    if (!try_spawn(p)) throw ConfigError(spec_.id + ": not enough free spawn points for all players");
  }
}

std::string Substrate::action_name(int a) const {
  switch (a) {
    case action::kNoop: return "noop";
    case action::kForward: return "forward";
    case action::kBackward: return "backward";
    case action::kStrafeLeft: return "strafe_left";
    case action::kStrafeRight: return "strafe_right";
    case action::kTurnLeft: return "turn_left";
    case action::kTurnRight: return "turn_right";
    default: return "action_" + std::to_string(a);
  }
}

bool Substrate::is_passable(int, Position p) const {
  return state_.terrain_at(p) == Terrain::kFloor;
}

std::optional<BeamSpec> Substrate::beam_spec(BeamKind kind) const { return beams_[static_cast<int>(kind)]; }

void Substrate::place_avatar(int player, Position p) {
  auto& a = avatar(player);
  if (!a.removed() && state_.occupant_at(a.position) == player) state_.occupant[state_.index(a.position)] = -1;
  a.position = p;
  a.removed_until.reset();
  state_.occupant[state_.index(p)] = static_cast<std::int16_t>(player);
}

void Substrate::remove_avatar_from_grid(int player) {
  auto& a = avatar(player);
  if (state_.in_bounds(a.position) && state_.occupant_at(a.position) == player) {
    state_.occupant[state_.index(a.position)] = -1;
  }
}

bool Substrate::try_spawn(int player) {
  const int group = std::min<int>(spawn_group(player), static_cast<int>(spawn_groups_.size()) - 1);
  const auto& pts = spawn_groups_[group];
  auto& cursor = spawn_cursor_[group];
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::size_t i = (cursor + k) % pts.size();
    const Position p = pts[i];
    if (state_.occupant_at(p) != -1 || !is_passable(player, p)) continue;
    place_avatar(player, p);
    cursor = (i + 1) % pts.size();
    on_avatar_placed(player);
    return true;
  }
  return false;
}

void Substrate::respawn_due() {
  for (int p = 0; p < num_players(); ++p) {
    auto& a = avatar(p);
    if (!a.removed() || *a.removed_until == kPermanentRemoval || *a.removed_until > state_.step) continue;
    a.orientation = static_cast<Orientation>(state_.rng.below(4, Stream::kRespawnFacing, state_.step, p));
    if (try_spawn(p)) emit(events::kPlayerRespawned, p, -1, a.position);
  }
}

Event Substrate::make_event(std::string_view name, int actor, int target, std::optional<Position> pos) const {
  Event e;
  e.name = std::string(name);
  e.actor = actor;
  e.target = target;
  e.position = pos;
  e.timestep = state_.step;
  return e;
}

Event& Substrate::emit(std::string_view name, int actor, int target, std::optional<Position> pos) {
  state_.event_log.push_back(make_event(name, actor, target, pos));
  return state_.event_log.back();
}

void Substrate::reward(int player, double amount, Event cause) {
  step_rewards_[player] += amount;
  cause.timestep = state_.step;
  cause.with("reward", amount);
  state_.event_log.push_back(std::move(cause));
}

void Substrate::remove_player(int player, int duration) {
  auto& a = avatar(player);
  if (a.removed()) return;
  remove_avatar_from_grid(player);
  a.removed_until = duration == kPermanentRemoval ? kPermanentRemoval : state_.step + duration;
  a.frozen_until = 0;
  on_removed(player);
}

void Substrate::apply_movement(int player, int act) {
  auto& a = avatar(player);
  Orientation dir = a.orientation;
  switch (act) {
    case action::kTurnLeft: a.orientation = rotate_left(a.orientation); return;
    case action::kTurnRight: a.orientation = rotate_right(a.orientation); return;
    case action::kForward: break;
    case action::kBackward: dir = opposite(dir); break;
    case action::kStrafeLeft: dir = rotate_left(dir); break;
    case action::kStrafeRight: dir = rotate_right(dir); break;
    default: return;
  }
  const Position target = a.position + unit_vector(dir);
  const bool ok = state_.in_bounds(target) && can_move(player) && is_passable(player, target) &&
                  state_.occupant_at(target) == -1;
  if (!ok) {
    emit(events::kBump, player, state_.in_bounds(target) ? state_.occupant_at(target) : -1, target);
    if (state_.in_bounds(target)) on_blocked(player, target);
    return;
  }
  place_avatar(player, target);
  on_enter(player, target);
}

Substrate::StepResult Substrate::step(std::span<const int> joint_action) {
  if (done()) throw EngineError(spec_.id + ": episode already finished at step " + std::to_string(state_.step));
  if (static_cast<int>(joint_action.size()) != num_players()) {
    throw EngineError(spec_.id + ": joint action has " + std::to_string(joint_action.size()) + " entries, expected " +
                      std::to_string(num_players()));
  }
  for (std::size_t i = 0; i < joint_action.size(); ++i) {
    if (joint_action[i] < 0 || joint_action[i] >= num_actions()) {
      throw EngineError(spec_.id + ": player " + std::to_string(i) + " issued illegal action " +
                        std::to_string(joint_action[i]));
    }
  }
  last_first_event_ = state_.event_log.size();
  std::fill(step_rewards_.begin(), step_rewards_.end(), 0.0);

  respawn_due();
  const int n = num_players();
  for (int p = 0; p < n; ++p) {
    const auto& a = avatar(p);
    if (a.removed() || a.frozen(state_.step)) continue;
    const int act = joint_action[p];
    if (act > action::kNoop && act < action::kFirstSubstrateAction) apply_movement(p, act);
  }
  for (int p = 0; p < n; ++p) {
    const auto& a = avatar(p);
    if (a.removed() || a.frozen(state_.step)) continue;
    if (joint_action[p] >= action::kFirstSubstrateAction) on_action(p, joint_action[p]);
  }
  world_update();
  ++state_.step;

  for (int p = 0; p < n; ++p) returns_[p] += step_rewards_[p];
  last_rewards_ = step_rewards_;
  return {step_rewards_, last_first_event_, done()};
}

std::span<const Event> Substrate::last_events() const {
  return std::span<const Event>(state_.event_log).subspan(last_first_event_);
}

std::vector<BeamHit> Substrate::cast_beam(int player, BeamKind kind) {
  const auto spec = beam_spec(kind);
  if (!spec) throw EngineError(spec_.id + ": beam kind not available in this substrate");
  auto& a = avatar(player);
  const int k = static_cast<int>(kind);
  if (state_.step < a.beam_ready_at[k]) {
    emit(events::kBeamBlocked, player, -1, a.position).with("beam", k);
    return {};
  }
  a.beam_ready_at[k] = state_.step + spec->cooldown;
  std::vector<BeamHit> hits;
  const Position dir = unit_vector(a.orientation);
  for (int d = 1; d <= spec->range; ++d) {
    const Position p = a.position + dir * d;
    if (!state_.in_bounds(p) || state_.terrain_at(p) == Terrain::kWall) break;
    const int occ = state_.occupant_at(p);
    if (occ != -1 && beam_hits_avatar(kind, player, occ)) {
      hits.push_back({BeamHit::Kind::kAvatar, p, occ});
      break;
    }
    const BeamCell effect = beam_cell(kind, player, p);
    if (effect == BeamCell::kHitPass || effect == BeamCell::kHitStop) hits.push_back({BeamHit::Kind::kCell, p, -1});
    if (effect == BeamCell::kHitStop || effect == BeamCell::kStop) break;
  }
  emit(events::kBeamFired, player, -1, a.position).with("beam", k).with("hits", static_cast<double>(hits.size()));
  return hits;
}

CellLook Substrate::cell_look(Position p) const {
  CellLook look;
  switch (state_.terrain_at(p)) {
    case Terrain::kWall: look.background = palette::kWall; break;
    case Terrain::kRiver: look.background = palette::kBlue; break;
    case Terrain::kFloor: look.background = palette::kFloor; break;
  }
  return look;
}

AvatarLook Substrate::avatar_look(int player) const {
  return {palette::player_color(avatar(player).color_tag), std::nullopt};
}

Observation Substrate::observe(int player) const {
  if (player < 0 || player >= num_players()) {
    throw EngineError(spec_.id + ": invalid player index " + std::to_string(player));
  }
  const auto& w = spec_.window;
  Observation obs;
  obs.pixels = Image(w.cols() * kSpritePixels, w.rows() * kSpritePixels);
  obs.reward = last_rewards_[player];
  obs.inventory = observed_inventory(player);
  const auto& me = avatar(player);
  if (me.removed()) return obs;
  const Position fwd = unit_vector(me.orientation);
  const Position right = unit_vector(rotate_right(me.orientation));
  for (int r = 0; r < w.rows(); ++r) {
    for (int c = 0; c < w.cols(); ++c) {
      const Position p = me.position + fwd * (w.ahead - r) + right * (c - w.side);
      const int x0 = c * kSpritePixels;
      const int y0 = r * kSpritePixels;
      if (!state_.in_bounds(p)) continue;  // outside the map stays black
      draw_cell(obs.pixels, x0, y0, cell_look(p));
      const int occ = state_.occupant_at(p);
      if (occ != -1) {
        const int rel = (static_cast<int>(avatar(occ).orientation) - static_cast<int>(me.orientation) + 4) % 4;
        draw_avatar(obs.pixels, x0, y0, avatar_look(occ), static_cast<Orientation>(rel));
      }
    }
  }
  return obs;
}

Image Substrate::render_world() const {
  Image img(state_.width * kSpritePixels, state_.height * kSpritePixels);
  for (int r = 0; r < state_.height; ++r) {
    for (int c = 0; c < state_.width; ++c) {
      const Position p{r, c};
      draw_cell(img, c * kSpritePixels, r * kSpritePixels, cell_look(p));
      const int occ = state_.occupant_at(p);
      if (occ != -1) draw_avatar(img, c * kSpritePixels, r * kSpritePixels, avatar_look(occ), avatar(occ).orientation);
    }
  }
  return img;
}

void Substrate::write_state(ByteWriter& w) const {
  w.str(spec_.id);
  w.u64(state_.rng.seed());
  w.i32(state_.step);
  w.i32(state_.episode_length);
  w.i32(state_.width);
  w.i32(state_.height);
  for (auto t : state_.terrain) w.u8(static_cast<std::uint8_t>(t));
  for (const auto& it : state_.items) {
    w.u8(static_cast<std::uint8_t>(it.kind));
    w.u8(it.variant);
    w.u8(it.flags);
  }
  for (const auto& a : state_.avatars) {
    w.i32(a.id);
    w.i32(a.position.row);
    w.i32(a.position.col);
    w.u8(static_cast<std::uint8_t>(a.orientation));
    w.i32(a.health);
    w.u32(static_cast<std::uint32_t>(a.inventory.size()));
    for (double c : a.inventory.counts()) w.f64(c);
    w.i32(a.removed_until.value_or(-1));
    w.i32(a.team ? static_cast<int>(*a.team) : -1);
    w.u8(a.color_tag);
    w.i32(a.frozen_until);
    w.i32(a.carried);
    for (int t : a.beam_ready_at) w.i32(t);
  }
  for (auto o : state_.occupant) w.i32(o);
  for (double r : returns_) w.f64(r);
  w.u32(static_cast<std::uint32_t>(state_.event_log.size()));
  w.u64(event_digest(state_.event_log));
  for (std::size_t c : spawn_cursor_) w.u64(c);
  serialize_extra(w);
}

std::vector<std::uint8_t> Substrate::serialize() const {
  ByteWriter w;
  write_state(w);
  return w.take();
}

std::uint64_t Substrate::digest() const {
  ByteWriter w;
  write_state(w);
  return fnv1a64(w.bytes());
}

}  // namespace socialgrid
