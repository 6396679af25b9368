#include <algorithm>
#include <charconv>
#include <functional>
#include <string>

#include "socialgrid/bots/behavior.hpp"
#include "socialgrid/bots/navigation.hpp"
#include "socialgrid/chemistry/chemistry.hpp"
#include "socialgrid/ecology/allelopathic_harvest.hpp"
#include "socialgrid/ecology/clean_up.hpp"
#include "socialgrid/ecology/rates.hpp"
#include "socialgrid/matrix/matrix_substrate.hpp"
#include "socialgrid/territory/team_game.hpp"
#include "socialgrid/territory/territory.hpp"

namespace socialgrid {

namespace {

template <typename T>
const T& require(const Substrate& world, std::string_view behavior) {
  const auto* s = dynamic_cast<const T*>(&world);
  if (!s) throw EngineError(std::string(behavior) + " cannot run in substrate '" + world.id() + "'");
  return *s;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError("bad " + std::string(what) + " argument '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Random movement or turn, never noop.
int wander(const BehaviorContext& ctx, std::uint64_t salt = 0) {
  const CounterRng rng(ctx.seed);
  return 1 + static_cast<int>(rng.below(6, Stream::kPolicy, static_cast<std::uint64_t>(ctx.step), salt + 7919));
}

// Random move that never enters a cell in `avoid`; turns instead.
int wander_avoiding(const BehaviorContext& ctx, const nav::CellPredicate& avoid) {
  const int a = wander(ctx);
  if (a < action::kForward || a > action::kStrafeRight) return a;
  const auto& self = ctx.world.state().avatars[ctx.player];
  Orientation dir = self.orientation;
  if (a == action::kBackward) dir = opposite(dir);
  if (a == action::kStrafeLeft) dir = rotate_left(dir);
  if (a == action::kStrafeRight) dir = rotate_right(dir);
  const Position next = self.position + unit_vector(dir);
  return ctx.world.state().in_bounds(next) && avoid(next) ? action::kTurnLeft : a;
}

const Avatar& me(const BehaviorContext& ctx) { return ctx.world.state().avatars[ctx.player]; }

int beam_range(const Substrate& world, BeamKind kind, std::string_view behavior) {
  const auto b = world.beam_spec(kind);
  if (!b) throw EngineError(std::string(behavior) + ": substrate '" + world.id() + "' has no such beam");
  return b->range;
}

std::vector<Position> cells_where(const GridState& st, const std::function<bool(Position)>& pred) {
  std::vector<Position> out;
  for (int r = 0; r < st.height; ++r) {
    for (int c = 0; c < st.width; ++c) {
      if (pred({r, c})) out.push_back({r, c});
    }
  }
  return out;
}

bool is_opponent(const Substrate& world, int a, int b) {
  const auto& st = world.state();
  const auto& ta = st.avatars[a].team;
  const auto& tb = st.avatars[b].team;
  if (ta && tb) return *ta != *tb;
  return a != b;
}

// Fires at an opponent already in line of fire; never moves.
std::optional<int> fire_if_lined_up(const BehaviorContext& ctx, int range, int fire) {
  const auto& st = ctx.world.state();
  const auto& self = me(ctx);
  std::optional<Orientation> turn;
  for (int q = 0; q < st.num_players(); ++q) {
    if (q == ctx.player || st.avatars[q].removed() || !is_opponent(ctx.world, ctx.player, q)) continue;
    const auto d = nav::line_of_fire(ctx.world, self.position, st.avatars[q].position, range);
    if (!d) continue;
    if (*d == self.orientation) return fire;
    if (!turn) turn = d;
  }
  if (turn) return nav::turn_toward(self.orientation, *turn);
  return std::nullopt;
}

nav::CellPredicate other_resource(const GridState& st, int k) {
  return [&st, k](Position p) {
    const auto& it = st.item_at(p);
    return it.kind == ItemKind::kResource && it.variant != k;
  };
}

// Path to resource k that avoids stepping on other resources when it can.
std::optional<int> step_to_resource(const BehaviorContext& ctx, int k) {
  const auto& st = ctx.world.state();
  auto is_k = [&](Position p) {
    const auto& it = st.item_at(p);
    return it.kind == ItemKind::kResource && it.variant == k;
  };
  if (const auto step = nav::step_toward(ctx.world, ctx.player, is_k, other_resource(st, k))) return step;
  return nav::step_toward(ctx.world, ctx.player, is_k);
}

class NoOp final : public Behavior {
 public:
  int act(const BehaviorContext&) override { return action::kNoop; }
};

class RandomWalk final : public Behavior {
 public:
  int act(const BehaviorContext& ctx) override { return wander(ctx); }
};

// ---------------------------------------------------------------- matrix --

class CollectResource final : public Behavior {
 public:
  explicit CollectResource(int k) : k_(k) {}
  int act(const BehaviorContext& ctx) override {
    const auto& m = require<MatrixSubstrate>(ctx.world, "collect-resource");
    if (k_ >= m.matrix_spec().k) throw EngineError("collect-resource: no resource " + std::to_string(k_));
    const auto step = step_to_resource(ctx, k_);
    return step ? *step : wander_avoiding(ctx, other_resource(ctx.world.state(), k_));
  }

 private:
  int k_;
};

int collect_then_engage(const BehaviorContext& ctx, int k, int n) {
  const auto& m = require<MatrixSubstrate>(ctx.world, "collect-and-engage");
  const auto& spec = m.matrix_spec();
  if (k >= spec.k) throw EngineError("collect-and-engage: no resource " + std::to_string(k));
  const auto& self = me(ctx);
  if (self.removed()) return action::kNoop;
  const double gathered = self.inventory[k] - spec.initial_inventory[k];
  if (gathered < n) {
    if (const auto step = step_to_resource(ctx, k)) return *step;
    if (gathered <= 0) return wander_avoiding(ctx, other_resource(ctx.world.state(), k));
  }
  const int range = beam_range(ctx.world, BeamKind::kInteract, "collect-and-engage");
  const bool roles = spec.role_assignment == RoleAssignment::kFixedRowColumn;
  const auto avoid = other_resource(ctx.world.state(), k);
  const auto a = nav::engage(
      ctx.world, ctx.player, range, MatrixSubstrate::kInteract,
      [&](int q) { return !roles || m.is_row_player(q) != m.is_row_player(ctx.player); }, avoid);
  return a ? *a : wander_avoiding(ctx, avoid);
}

class CollectAndEngage final : public Behavior {
 public:
  CollectAndEngage(int k, int n) : k_(k), n_(n) {}
  int act(const BehaviorContext& ctx) override { return collect_then_engage(ctx, k_, n_); }

 private:
  int k_;
  int n_;
};

// Collects whatever beats the partner's last dominant choice.
class CounterCollectAndEngage final : public Behavior {
 public:
  CounterCollectAndEngage(int k, int n) : k_(k), n_(n) {}
  int act(const BehaviorContext& ctx) override {
    const auto& m = require<MatrixSubstrate>(ctx.world, "counter-collect-and-engage");
    const int kk = m.matrix_spec().k;
    for (const auto& e : ctx.new_events) {
      if (e.name != events::kInteractionOutcome || e.actor != ctx.player) continue;
      const int c = static_cast<int>(e.get("partner_choice", -1));
      if (c >= 0) k_ = (c + 1) % kk;
    }
    return collect_then_engage(ctx, k_, n_);
  }

 private:
  int k_;
  int n_;
};

// --------------------------------------------------------------- zapping --

class ApproachAndZap final : public Behavior {
 public:
  int act(const BehaviorContext& ctx) override {
    const int range = beam_range(ctx.world, BeamKind::kZap, "approach-and-zap-nearest-opponent");
    const auto a = nav::engage(ctx.world, ctx.player, range, action::kFirstSubstrateAction,
                               [&](int q) { return is_opponent(ctx.world, ctx.player, q); });
    return a ? *a : wander(ctx);
  }
};

class GuardCell final : public Behavior {
 public:
  explicit GuardCell(std::string arg) : arg_(std::move(arg)) {}
  int act(const BehaviorContext& ctx) override {
    const auto& self = me(ctx);
    if (self.removed()) return action::kNoop;
    const Position post = target(ctx);
    if (const auto zap = ctx.world.beam_spec(BeamKind::kZap)) {
      if (const auto a = fire_if_lined_up(ctx, zap->range, action::kFirstSubstrateAction)) return *a;
    }
    if (self.position == post) return action::kNoop;
    const auto step = nav::step_toward(ctx.world, ctx.player, [&](Position p) { return p == post; });
    return step ? *step : action::kNoop;
  }

 private:
  Position target(const BehaviorContext& ctx) const {
    if (arg_ == "flag") {
      const auto& g = require<TeamGame>(ctx.world, "guard-cell:flag");
      return g.flag(g.team_of(ctx.player)).home;
    }
    if (arg_ == "hill") {
      const auto& g = require<TeamGame>(ctx.world, "guard-cell:hill");
      const auto& hill = g.hill_cells();
      if (hill.empty()) throw EngineError("guard-cell:hill: substrate has no hill");
      return hill[hill.size() / 2];
    }
    const auto parts = split(arg_, ',');
    return {parse_int(parts.at(0), "guard-cell"), parse_int(parts.at(1), "guard-cell")};
  }

  std::string arg_;
};

// -------------------------------------------------------------- ecology --

bool has_apple(const GridState& st, Position p) { return st.in_bounds(p) && st.item_at(p).kind == ItemKind::kApple; }

int apples_within_two(const GridState& st, Position p) {
  int n = 0;
  for (const Position d : kAppleNeighborhood) n += has_apple(st, p + d) ? 1 : 0;
  return n;
}

class HarvestApples final : public Behavior {
 public:
  explicit HarvestApples(bool sustainable) : sustainable_(sustainable) {}
  int act(const BehaviorContext& ctx) override {
    const auto& st = ctx.world.state();
    if (me(ctx).removed()) return action::kNoop;
    auto edible = [&](Position p) { return has_apple(st, p) && (!sustainable_ || apples_within_two(st, p) >= 1); };
    nav::CellPredicate avoid;
    if (sustainable_) avoid = [&](Position p) { return has_apple(st, p) && !edible(p); };
    if (const auto step = nav::step_toward(ctx.world, ctx.player, edible, avoid)) return *step;
    return sustainable_ ? wander_avoiding(ctx, [&](Position p) { return has_apple(st, p); }) : wander(ctx);
  }

 private:
  bool sustainable_;
};

class CleanRiver final : public Behavior {
 public:
  int act(const BehaviorContext& ctx) override {
    require<CleanUp>(ctx.world, "clean-river");
    const auto& st = ctx.world.state();
    if (river_.empty()) river_ = cells_where(st, [&](Position p) { return st.terrain_at(p) == Terrain::kRiver; });
    const int range = beam_range(ctx.world, BeamKind::kClean, "clean-river");
    const auto a = nav::aim_at_cells(ctx.world, ctx.player, range, CleanUp::kClean, river_);
    return a ? *a : wander(ctx);
  }

 private:
  std::vector<Position> river_;
};

bool ripe_berry(const GridState& st, Position p) {
  const auto& it = st.item_at(p);
  return it.kind == ItemKind::kBerry && (it.flags & 1) != 0;
}

class EatRipeBerries final : public Behavior {
 public:
  int act(const BehaviorContext& ctx) override {
    require<AllelopathicHarvest>(ctx.world, "eat-ripe-berries");
    const auto& st = ctx.world.state();
    const auto step = nav::step_toward(ctx.world, ctx.player, [&](Position p) { return ripe_berry(st, p); });
    return step ? *step : wander(ctx);
  }
};

class PlantColor final : public Behavior {
 public:
  explicit PlantColor(int color) : color_(color) {}
  int act(const BehaviorContext& ctx) override {
    const auto& ah = require<AllelopathicHarvest>(ctx.world, "plant-color");
    const auto& st = ctx.world.state();
    std::vector<Position> targets;
    for (const Position p : ah.berry_cells()) {
      const auto& it = st.item_at(p);
      if ((it.flags & 1) == 0 && it.variant != color_) targets.push_back(p);
    }
    const int range = beam_range(ctx.world, BeamKind::kPlant, "plant-color");
    if (const auto a = nav::aim_at_cells(ctx.world, ctx.player, range, AllelopathicHarvest::kPlantRed + color_, targets)) {
      return *a;
    }
    return eat_.act(ctx);
  }

 private:
  int color_;
  EatRipeBerries eat_;
};

// ------------------------------------------------------------ territory --

class ClaimTerritory final : public Behavior {
 public:
  int act(const BehaviorContext& ctx) override {
    const auto& t = require<Territory>(ctx.world, "claim-territory");
    if (me(ctx).removed()) return action::kNoop;
    std::vector<Position> targets;
    for (const auto& w : t.resources()) {
      if (!w.destroyed() && w.owner != ctx.player) targets.push_back(w.cell);
    }
    const int range = beam_range(ctx.world, BeamKind::kClaim, "claim-territory");
    const auto a = nav::aim_at_cells(ctx.world, ctx.player, range, Territory::kClaim, targets);
    return a ? *a : action::kNoop;
  }
};

class PaintTerritory final : public Behavior {
 public:
  explicit PaintTerritory(bool hill_only) : hill_only_(hill_only) {}
  int act(const BehaviorContext& ctx) override {
    const auto& g = require<TeamGame>(ctx.world, "paint-territory");
    const auto& self = me(ctx);
    if (self.removed()) return action::kNoop;
    const Ground own = ground_of(g.team_of(ctx.player));
    if (g.ground_at(self.position) != own) return TeamGame::kZap;
    const int range = g.team_spec().zap.range;
    if (const auto a = fire_if_lined_up(ctx, range, TeamGame::kZap)) return *a;
    const auto& st = ctx.world.state();
    std::vector<Position> targets;
    if (hill_only_) {
      for (const Position p : g.hill_cells()) {
        if (g.ground_at(p) != own) targets.push_back(p);
      }
    } else {
      targets = cells_where(st, [&](Position p) { return st.terrain_at(p) == Terrain::kFloor && g.ground_at(p) != own; });
    }
    if (const auto a = nav::aim_at_cells(ctx.world, ctx.player, range, TeamGame::kZap, targets)) return *a;
    if (hill_only_) {
      const auto& hill = g.hill_cells();
      const auto step = nav::step_toward(ctx.world, ctx.player, [&](Position p) {
        return std::find(hill.begin(), hill.end(), p) != hill.end();
      });
      if (step) return *step;
      return action::kNoop;
    }
    return wander(ctx);
  }

 private:
  bool hill_only_;
};

// Walks toward `goal`, repainting opposing ground that blocks the way.
int cross_toward(const BehaviorContext& ctx, const TeamGame& g, Position goal) {
  const auto& st = ctx.world.state();
  const auto& self = me(ctx);
  const auto dir = nav::first_direction(ctx.world, ctx.player, [&](Position p) { return p == goal; },
                                        [&](Position p) { return st.terrain_at(p) == Terrain::kFloor; });
  if (!dir) return wander(ctx);
  const Position next = self.position + unit_vector(*dir);
  if (!g.opposing(ctx.player, next)) return nav::move_action(self.orientation, *dir);
  return *dir == self.orientation ? TeamGame::kZap : nav::turn_toward(self.orientation, *dir);
}

class CaptureFlag final : public Behavior {
 public:
  int act(const BehaviorContext& ctx) override {
    const auto& g = require<TeamGame>(ctx.world, "capture-flag");
    if (g.team_spec().mode != TeamMode::kCaptureTheFlag) throw EngineError("capture-flag needs capture the flag");
    const auto& self = me(ctx);
    if (self.removed()) return action::kNoop;
    const Team team = g.team_of(ctx.player);
    if (g.ground_at(self.position) == ground_of(other_team(team))) return TeamGame::kZap;
    const auto& mine = g.flag(team);
    const auto& theirs = g.flag(other_team(team));
    if (const auto a = fire_if_lined_up(ctx, g.team_spec().zap.range, TeamGame::kZap)) return *a;
    Position goal = mine.home;
    if (theirs.carrier != ctx.player && theirs.carrier < 0) goal = theirs.on_ground.value_or(theirs.home);
    if (self.position == goal) return action::kNoop;
    return cross_toward(ctx, g, goal);
  }
};

class DefendFlag final : public Behavior {
 public:
  int act(const BehaviorContext& ctx) override {
    const auto& g = require<TeamGame>(ctx.world, "defend-flag");
    if (g.team_spec().mode != TeamMode::kCaptureTheFlag) throw EngineError("defend-flag needs capture the flag");
    const auto& self = me(ctx);
    if (self.removed()) return action::kNoop;
    const Team team = g.team_of(ctx.player);
    if (g.ground_at(self.position) == ground_of(other_team(team))) return TeamGame::kZap;
    const int range = g.team_spec().zap.range;
    const auto& mine = g.flag(team);
    if (mine.carrier >= 0) {
      const int carrier = mine.carrier;
      const auto a = nav::engage(ctx.world, ctx.player, range, TeamGame::kZap, [&](int q) { return q == carrier; });
      if (a) return *a;
    }
    if (mine.on_ground) {
      const Position at = *mine.on_ground;
      return cross_toward(ctx, g, at);
    }
    if (const auto a = fire_if_lined_up(ctx, range, TeamGame::kZap)) return *a;
    if (nav::manhattan(self.position, mine.home) > 2) {
      const auto step = nav::step_toward(ctx.world, ctx.player, [&](Position p) { return nav::manhattan(p, mine.home) <= 2; });
      return step ? *step : TeamGame::kZap;
    }
    // Keep the ground around the base in our color.
    const Ground own = ground_of(team);
    const Position ahead = self.position + unit_vector(self.orientation);
    if (ctx.world.state().in_bounds(ahead) && g.ground_at(ahead) != own) return TeamGame::kZap;
    return action::kTurnRight;
  }
};

// ------------------------------------------------------------ chemistry --

class CarryMolecule final : public Behavior {
 public:
  explicit CarryMolecule(std::string arg) : arg_(std::move(arg)) {}
  int act(const BehaviorContext& ctx) override {
    const auto& chem = require<Chemistry>(ctx.world, "carry-molecule-to");
    resolve(chem);
    const auto& st = ctx.world.state();
    const auto& self = me(ctx);
    if (self.removed()) return action::kNoop;
    auto molecule = [&](Position p, int s) {
      const auto& it = st.item_at(p);
      return it.kind == ItemKind::kMolecule && it.variant == s;
    };
    if (self.carried >= 0 && self.carried != carry_) {
      const Position front = self.position + unit_vector(self.orientation);
      if (st.in_bounds(front) && st.terrain_at(front) == Terrain::kFloor && st.item_at(front).empty() &&
          st.occupant_at(front) == -1) {
        return Chemistry::kGrabDrop;
      }
      return action::kTurnRight;
    }
    if (self.carried < 0) {
      const auto targets = cells_where(st, [&](Position p) { return molecule(p, carry_); });
      const auto a = nav::aim_at_cells(ctx.world, ctx.player, 1, Chemistry::kGrabDrop, targets);
      return a ? *a : wander(ctx);
    }
    if (to_ < 0) return wander(ctx);
    const int r = chem.radius();
    auto near_target = [&](Position p) {
      for (int dr = -r; dr <= r; ++dr) {
        for (int dc = -r; dc <= r; ++dc) {
          const Position q = p + Position{dr, dc};
          if (st.in_bounds(q) && molecule(q, to_)) return true;
        }
      }
      return false;
    };
    if (near_target(self.position)) return action::kNoop;
    const auto step = nav::step_toward(ctx.world, ctx.player, near_target);
    return step ? *step : wander(ctx);
  }

 private:
  void resolve(const Chemistry& chem) {
    if (carry_ >= 0) return;
    const auto parts = split(arg_, '@');
    carry_ = chem.graph().species_index(std::string(parts[0]));
    if (parts.size() > 1) to_ = chem.graph().species_index(std::string(parts[1]));
  }

  std::string arg_;
  int carry_ = -1;
  int to_ = -1;
};

// -------------------------------------------------------------- library --

constexpr BehaviorInfo kLibrary[] = {
    {"no-op", "", "always action 0"},
    {"random-walk", "", "uniform random movement and turns"},
    {"collect-resource", "k", "walk to the nearest resource of type k"},
    {"collect-and-engage", "k[,n]", "gather n (default 2) of resource k, then hunt partners with the interaction beam"},
    {"counter-collect-and-engage", "k[,n]", "as collect-and-engage, switching to the resource that beats the last partner"},
    {"approach-and-zap-nearest-opponent", "", "chase the nearest opponent and zap it"},
    {"guard-cell", "row,col|flag|hill", "hold a cell and zap opponents in line"},
    {"harvest-apples-greedily", "", "eat the nearest apple"},
    {"harvest-apples-sustainably", "", "only eat apples that have another apple within radius 2"},
    {"clean-river", "", "walk to the river and fire the cleaning beam"},
    {"eat-ripe-berries", "", "eat the nearest ripe berry"},
    {"plant-color", "k", "replant unripe berries to color k (0 red, 1 green, 2 blue)"},
    {"claim-territory", "", "claim the nearest resource wall not owned by us"},
    {"paint-territory", "[hill]", "paint ground in the team color, optionally only the hill"},
    {"capture-flag", "", "fetch the enemy flag and bring it home"},
    {"defend-flag", "", "stay near the home flag, return it and chase its carrier"},
    {"carry-molecule-to", "species[@target]", "hold a molecule of species, next to molecules of target"},
};

}  // namespace

std::span<const BehaviorInfo> behavior_library() { return kLibrary; }

std::unique_ptr<Behavior> make_behavior(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  auto needs_no_arg = [&] {
    if (!arg.empty()) throw ConfigError("behavior '" + std::string(name) + "' takes no argument");
  };
  auto k_and_n = [&](int& k, int& n) {
    const auto parts = split(arg, ',');
    if (arg.empty() || parts.size() > 2) throw ConfigError("behavior '" + std::string(name) + "' needs k[,n]");
    k = parse_int(parts[0], name);
    n = parts.size() > 1 ? parse_int(parts[1], name) : 2;
    if (k < 0 || n < 0) throw ConfigError("behavior '" + std::string(name) + "': negative argument");
  };
  int k = 0;
  int n = 0;
  if (name == "no-op") return needs_no_arg(), std::make_unique<NoOp>();
  if (name == "random-walk") return needs_no_arg(), std::make_unique<RandomWalk>();
  if (name == "collect-resource") {
    k = parse_int(arg, name);
    if (k < 0) throw ConfigError("collect-resource: negative resource index");
    return std::make_unique<CollectResource>(k);
  }
  if (name == "collect-and-engage") return k_and_n(k, n), std::make_unique<CollectAndEngage>(k, n);
  if (name == "counter-collect-and-engage") return k_and_n(k, n), std::make_unique<CounterCollectAndEngage>(k, n);
  if (name == "approach-and-zap-nearest-opponent") return needs_no_arg(), std::make_unique<ApproachAndZap>();
  if (name == "guard-cell") {
    if (arg != "flag" && arg != "hill") {
      const auto parts = split(arg, ',');
      if (parts.size() != 2) throw ConfigError("guard-cell needs row,col, flag or hill");
      parse_int(parts[0], name);
      parse_int(parts[1], name);
    }
    return std::make_unique<GuardCell>(std::string(arg));
  }
  if (name == "harvest-apples-greedily") return needs_no_arg(), std::make_unique<HarvestApples>(false);
  if (name == "harvest-apples-sustainably") return needs_no_arg(), std::make_unique<HarvestApples>(true);
  if (name == "clean-river") return needs_no_arg(), std::make_unique<CleanRiver>();
  if (name == "eat-ripe-berries") return needs_no_arg(), std::make_unique<EatRipeBerries>();
  if (name == "plant-color") {
    k = parse_int(arg, name);
    if (k < 0 || k >= kNumBerryColors) throw ConfigError("plant-color: color must be 0, 1 or 2");
    return std::make_unique<PlantColor>(k);
  }
  if (name == "claim-territory") return needs_no_arg(), std::make_unique<ClaimTerritory>();
  if (name == "paint-territory") {
    if (!arg.empty() && arg != "hill") throw ConfigError("paint-territory takes no argument or 'hill'");
    return std::make_unique<PaintTerritory>(arg == "hill");
  }
  if (name == "capture-flag") return needs_no_arg(), std::make_unique<CaptureFlag>();
  if (name == "defend-flag") return needs_no_arg(), std::make_unique<DefendFlag>();
  if (name == "carry-molecule-to") {
    if (arg.empty()) throw ConfigError("carry-molecule-to needs species[@target]");
    return std::make_unique<CarryMolecule>(std::string(arg));
  }
  throw ConfigError("unknown behavior '" + std::string(name) + "'");
}

}  // namespace socialgrid
