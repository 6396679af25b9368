#include "socialgrid/territory/team_game.hpp"

#include <algorithm>

namespace socialgrid {

namespace {

Color team_color(Team t) { return t == Team::kRed ? palette::kRed : palette::kBlue; }

Color ground_color(Ground g) {
  switch (g) {
    case Ground::kRed: return Color{110, 30, 30};
    case Ground::kBlue: return Color{30, 45, 115};
    case Ground::kNeutral: break;
  }
  return palette::kFloor;
}

}  // namespace

TeamGameSpec TeamGameSpec::from_json(const std::string& kind, const nlohmann::json& params) {
  TeamGameSpec s;
  if (kind == "capture_the_flag") s.mode = TeamMode::kCaptureTheFlag;
  else if (kind == "king_of_the_hill") s.mode = TeamMode::kKingOfTheHill;
  else throw ConfigError("not a team game kind: " + kind);
  s.zap = beam_from_json(params, "zap", s.zap);
  s.respawn_steps = params.value("respawn_steps", s.respawn_steps);
  s.initial_health = params.value("initial_health", s.initial_health);
  s.health_recovery = params.value("health_recovery", s.health_recovery);
  s.capture_reward = params.value("capture_reward", s.capture_reward);
  s.hill_reward = params.value("hill_reward", s.hill_reward);
  s.hill_threshold_percent = params.value("hill_threshold_percent", s.hill_threshold_percent);
  if (s.initial_health < 1 || s.initial_health > 3) throw ConfigError("initial_health must lie in [1, 3]");
  return s;
}

TeamGame::TeamGame(SubstrateSpec spec, std::uint64_t seed)
    : Substrate(std::move(spec), seed), gspec_(TeamGameSpec::from_json(spec_.kind, spec_.params)) {
  const auto cells = state_.terrain.size();
  ground_.assign(cells, Ground::kNeutral);
  hill_mask_.assign(cells, 0);
  indicator_mask_.assign(cells, 0);
  if (spec_.players % 2 != 0) throw ConfigError(spec_.id + ": team games need an even player count");
  set_beam(BeamKind::kZap, gspec_.zap);
  initialize();
}

std::string TeamGame::action_name(int a) const { return a == kZap ? "zap" : Substrate::action_name(a); }

int TeamGame::team_size(Team t) const {
  int n = 0;
  for (const auto& a : state_.avatars) n += a.team == t ? 1 : 0;
  return n;
}

bool TeamGame::init_cell(Position p, std::string_view tag) {
  const int idx = state_.index(p);
  if (tag == "hill") {
    hill_mask_[idx] = 1;
    hill_cells_.push_back(p);
  } else if (tag == "indicator") {
    indicator_mask_[idx] = 1;
    state_.terrain[idx] = Terrain::kWall;
  } else if (tag == "flag:red" || tag == "flag:blue") {
    const int t = tag == "flag:red" ? 0 : 1;
    flags_[t].home = p;
    has_flag_[t] = true;
  } else if (tag == "ground:red") {
    ground_[idx] = Ground::kRed;
  } else if (tag == "ground:blue") {
    ground_[idx] = Ground::kBlue;
  } else {
    return false;
  }
  return true;
}

void TeamGame::on_initialized() {
  if (gspec_.mode == TeamMode::kCaptureTheFlag && !(has_flag_[0] && has_flag_[1])) {
    throw ConfigError(spec_.id + ": capture the flag needs flag:red and flag:blue cells");
  }
  if (gspec_.mode == TeamMode::kKingOfTheHill && hill_cells_.empty()) {
    throw ConfigError(spec_.id + ": king of the hill needs hill cells");
  }
  if (spawn_group_count() != 2) throw ConfigError(spec_.id + ": team games need spawn:red and spawn:blue cells");
  const int n = num_players();
  for (int p = 0; p < n; ++p) {
    avatar(p).team = p < n / 2 ? Team::kRed : Team::kBlue;
    avatar(p).health = gspec_.initial_health;
  }
  // Team bases start in the team's color.
  for (int t = 0; t < 2; ++t) {
    for (const Position p : spawn_points(t)) ground_[state_.index(p)] = ground_of(static_cast<Team>(t));
  }
}

int TeamGame::spawn_group(int player) const { return static_cast<int>(team_of(player)); }

void TeamGame::on_avatar_placed(int player) { avatar(player).health = gspec_.initial_health; }

bool TeamGame::opposing(int player, Position p) const {
  return ground_at(p) == ground_of(other_team(team_of(player)));
}

int TeamGame::max_health(int player) const {
  const Ground g = ground_at(avatar(player).position);
  if (g == Ground::kNeutral) return 2;
  return g == ground_of(team_of(player)) ? 3 : 1;
}

bool TeamGame::can_move(int player) const { return !opposing(player, avatar(player).position); }

bool TeamGame::is_passable(int player, Position p) const {
  return Substrate::is_passable(player, p) && !opposing(player, p);
}

std::optional<Team> TeamGame::hill_controller() const {
  if (hill_cells_.empty()) return std::nullopt;
  std::array<long, 2> painted{0, 0};
  for (const Position p : hill_cells_) {
    const Ground g = ground_at(p);
    if (g == Ground::kRed) ++painted[0];
    if (g == Ground::kBlue) ++painted[1];
  }
  const long total = static_cast<long>(hill_cells_.size());
  for (int t = 0; t < 2; ++t) {
    if (painted[t] * 100 >= total * gspec_.hill_threshold_percent) return static_cast<Team>(t);
  }
  return std::nullopt;
}

Indicator TeamGame::indicator() const {
  if (gspec_.mode == TeamMode::kKingOfTheHill) {
    const auto t = hill_controller();
    if (!t) return Indicator::kPurple;
    return *t == Team::kRed ? Indicator::kRed : Indicator::kBlue;
  }
  const bool red = flags_[0].at_home();
  const bool blue = flags_[1].at_home();
  if (red && blue) return Indicator::kPurple;
  if (red) return Indicator::kRed;
  if (blue) return Indicator::kBlue;
  return Indicator::kNeutral;
}

void TeamGame::on_enter(int player, Position p) {
  if (gspec_.mode != TeamMode::kCaptureTheFlag) return;
  const Team own = team_of(player);
  auto& mine = flags_[static_cast<int>(own)];
  auto& theirs = flags_[static_cast<int>(other_team(own))];
  const bool carrying = theirs.carrier == player;
  if (!carrying && ((theirs.at_home() && theirs.home == p) || theirs.on_ground == p)) {
    theirs.carrier = player;
    theirs.on_ground.reset();
    emit(events::kFlagPickedUp, player, -1, p).with("flag_team", static_cast<int>(other_team(own)));
    return;
  }
  if (mine.on_ground == p) {
    mine.on_ground.reset();
    emit(events::kFlagReturned, player, -1, p).with("flag_team", static_cast<int>(own));
  }
  if (carrying && p == mine.home && mine.at_home()) {
    theirs.carrier = -1;
    for (int q = 0; q < num_players(); ++q) {
      if (team_of(q) != own) continue;
      auto e = make_event(events::kFlagCaptured, q, player, p);
      e.with("team", static_cast<int>(own));
      reward(q, gspec_.capture_reward, std::move(e));
    }
  }
}

void TeamGame::on_action(int player, int a) {
  if (a != kZap) return;
  const Ground own = ground_of(team_of(player));
  const Position here = avatar(player).position;
  int painted = 0;
  if (ground_at(here) != own) {
    paint(here, own);
    ++painted;
  }
  for (const auto& h : cast_beam(player, BeamKind::kZap)) {
    if (h.kind == BeamHit::Kind::kCell) {
      if (ground_at(h.position) != own) {
        paint(h.position, own);
        ++painted;
      }
      continue;
    }
    auto& target = avatar(h.player);
    target.health = std::max(0, target.health - 1);
    emit(events::kPlayerZapped, player, h.player, h.position).with("health", target.health);
    if (target.health == 0) {
      remove_player(h.player, gspec_.respawn_steps);
      emit(events::kPlayerRemoved, player, h.player, h.position).with("duration", gspec_.respawn_steps);
    }
  }
  if (painted > 0) emit(events::kGroundPainted, player, -1, here).with("cells", painted).with("team", static_cast<int>(team_of(player)));
}

void TeamGame::on_removed(int player) {
  for (int t = 0; t < 2; ++t) {
    auto& f = flags_[t];
    if (f.carrier != player) continue;
    f.carrier = -1;
    f.on_ground = avatar(player).position;
    emit(events::kFlagDropped, player, -1, *f.on_ground).with("flag_team", t);
  }
}

void TeamGame::world_update() {
  for (int p = 0; p < num_players(); ++p) {
    auto& a = avatar(p);
    if (a.removed()) continue;
    const int cap = max_health(p);
    if (a.health > cap) a.health = cap;
    else if (a.health < cap && state_.rng.bernoulli(gspec_.health_recovery, Stream::kHealthRecovery, state_.step, p)) ++a.health;
  }
  if (gspec_.mode != TeamMode::kKingOfTheHill) return;
  const auto team = hill_controller();
  if (!team) return;
  for (int p = 0; p < num_players(); ++p) {
    if (team_of(p) != *team) continue;
    auto e = make_event(events::kHillControl, p);
    e.with("team", static_cast<int>(*team));
    reward(p, gspec_.hill_reward, std::move(e));
  }
}

BeamCell TeamGame::beam_cell(BeamKind, int, Position p) const {
  return state_.terrain_at(p) == Terrain::kFloor ? BeamCell::kHitPass : BeamCell::kStop;
}

bool TeamGame::beam_hits_avatar(BeamKind, int shooter, int target) const { return team_of(shooter) != team_of(target); }

CellLook TeamGame::cell_look(Position p) const {
  CellLook look = Substrate::cell_look(p);
  const int idx = state_.index(p);
  if (indicator_mask_[idx]) {
    switch (indicator()) {
      case Indicator::kRed: look.background = palette::kRed; break;
      case Indicator::kBlue: look.background = palette::kBlue; break;
      case Indicator::kPurple: look.background = palette::kPurple; break;
      case Indicator::kNeutral: look.background = palette::kWall; break;
    }
    return look;
  }
  if (state_.terrain[idx] != Terrain::kFloor) return look;
  look.background = ground_color(ground_[idx]);
  if (hill_mask_[idx]) {
    look.shape = Shape::kRing;
    look.foreground = palette::kGray;
  }
  for (int t = 0; t < 2; ++t) {
    if (!has_flag_[t]) continue;
    const auto& f = flags_[t];
    if ((f.at_home() && f.home == p) || f.on_ground == p) {
      look.overlay = Shape::kPlus;
      look.overlay_color = team_color(static_cast<Team>(t));
    } else if (f.home == p && look.overlay == Shape::kNone) {
      look.overlay = Shape::kSmallSquare;
      look.overlay_color = team_color(static_cast<Team>(t));
    }
  }
  return look;
}

AvatarLook TeamGame::avatar_look(int player) const {
  const Team t = team_of(player);
  const auto& a = avatar(player);
  AvatarLook look{palette::lerp(palette::kFloor, team_color(t), 0.4 + 0.2 * std::min(a.health, 3)), std::nullopt};
  if (flags_[static_cast<int>(other_team(t))].carrier == player) look.mark = team_color(other_team(t));
  return look;
}

void TeamGame::serialize_extra(ByteWriter& w) const {
  for (auto g : ground_) w.u8(static_cast<std::uint8_t>(g));
  for (const auto& f : flags_) {
    w.i32(f.carrier);
    w.i32(f.on_ground ? f.on_ground->row : -1);
    w.i32(f.on_ground ? f.on_ground->col : -1);
  }
}

}  // namespace socialgrid
