#include "socialgrid/bots/navigation.hpp"

#include <cstdlib>
#include <deque>

namespace socialgrid::nav {

int manhattan(Position a, Position b) { return std::abs(a.row - b.row) + std::abs(a.col - b.col); }

int move_action(Orientation facing, Orientation dir) {
  if (dir == facing) return action::kForward;
  if (dir == opposite(facing)) return action::kBackward;
  if (dir == rotate_left(facing)) return action::kStrafeLeft;
  return action::kStrafeRight;
}

int turn_toward(Orientation facing, Orientation want) {
  if (want == facing) return action::kNoop;
  if (want == rotate_left(facing)) return action::kTurnLeft;
  return action::kTurnRight;
}

std::optional<Orientation> first_direction(const Substrate& world, int player, const CellPredicate& goal,
                                           const CellPredicate& enterable) {
  const auto& st = world.state();
  const auto& me = st.avatars[player];
  if (me.removed()) return std::nullopt;
  if (goal(me.position)) return std::nullopt;
  const int cells = st.width * st.height;
  // first[i] = direction of the first step on the path to cell i.
  std::vector<int> first(cells, -1);
  std::deque<Position> queue;
  first[st.index(me.position)] = 4;
  queue.push_back(me.position);
  while (!queue.empty()) {
    const Position p = queue.front();
    queue.pop_front();
    for (int d = 0; d < 4; ++d) {
      const Position q = p + unit_vector(static_cast<Orientation>(d));
      if (!st.in_bounds(q)) continue;
      const int qi = st.index(q);
      if (first[qi] != -1) continue;
      if (st.occupant[qi] != -1 || !enterable(q)) continue;
      first[qi] = first[st.index(p)] == 4 ? d : first[st.index(p)];
      if (goal(q)) return static_cast<Orientation>(first[qi]);
      queue.push_back(q);
    }
  }
  return std::nullopt;
}

std::optional<int> step_toward(const Substrate& world, int player, const CellPredicate& goal,
                               const CellPredicate& avoid) {
  if (world.state().avatars[player].removed() || !world.can_move_now(player)) return std::nullopt;
  const auto dir = first_direction(world, player, goal, [&](Position q) {
    return world.can_enter(player, q) && !(avoid && avoid(q));
  });
  if (!dir) return std::nullopt;
  return move_action(world.state().avatars[player].orientation, *dir);
}

std::optional<Orientation> line_of_fire(const Substrate& world, Position from, Position to, int range) {
  if (from == to) return std::nullopt;
  if (from.row != to.row && from.col != to.col) return std::nullopt;
  if (manhattan(from, to) > range) return std::nullopt;
  Orientation dir;
  if (to.row < from.row) dir = Orientation::kNorth;
  else if (to.row > from.row) dir = Orientation::kSouth;
  else if (to.col > from.col) dir = Orientation::kEast;
  else dir = Orientation::kWest;
  const auto& st = world.state();
  for (Position p = from + unit_vector(dir); p != to; p = p + unit_vector(dir)) {
    if (st.terrain_at(p) == Terrain::kWall) return std::nullopt;
  }
  return dir;
}

std::vector<Position> firing_positions(const Substrate& world, Position target, int range) {
  const auto& st = world.state();
  std::vector<Position> out;
  for (int d = 0; d < 4; ++d) {
    const Position step = unit_vector(static_cast<Orientation>(d));
    for (int k = 1; k <= range; ++k) {
      const Position p = target + step * k;
      if (!st.in_bounds(p) || st.terrain_at(p) == Terrain::kWall) break;
      out.push_back(p);
    }
  }
  return out;
}

std::optional<int> engage(const Substrate& world, int player, int range, int fire,
                          const std::function<bool(int)>& is_target, const CellPredicate& avoid) {
  const auto& st = world.state();
  const auto& me = st.avatars[player];
  if (me.removed()) return std::nullopt;
  std::vector<int> targets;
  for (int q = 0; q < st.num_players(); ++q) {
    if (q != player && !st.avatars[q].removed() && is_target(q)) targets.push_back(q);
  }
  if (targets.empty()) return std::nullopt;
  // Prefer the closest target already in line of fire.
  int best = -1;
  Orientation best_dir = me.orientation;
  for (int q : targets) {
    const auto dir = line_of_fire(world, me.position, st.avatars[q].position, range);
    if (!dir) continue;
    if (best < 0 || manhattan(me.position, st.avatars[q].position) < manhattan(me.position, st.avatars[best].position)) {
      best = q;
      best_dir = *dir;
    }
  }
  if (best >= 0) return best_dir == me.orientation ? fire : turn_toward(me.orientation, best_dir);
  std::vector<std::uint8_t> mark(st.terrain.size(), 0);
  for (int q : targets) {
    for (const Position p : firing_positions(world, st.avatars[q].position, range)) mark[st.index(p)] = 1;
  }
  const auto goal = [&](Position p) { return mark[st.index(p)] != 0; };
  if (avoid) {
    if (const auto a = step_toward(world, player, goal, avoid)) return a;
  }
  return step_toward(world, player, goal);
}

std::optional<int> aim_at_cells(const Substrate& world, int player, int range, int fire,
                                const std::vector<Position>& targets) {
  const auto& st = world.state();
  const auto& me = st.avatars[player];
  if (me.removed() || targets.empty()) return std::nullopt;
  std::optional<Orientation> dir;
  for (const Position t : targets) {
    const auto d = line_of_fire(world, me.position, t, range);
    if (!d) continue;
    if (*d == me.orientation) return fire;
    if (!dir) dir = d;
  }
  if (dir) return turn_toward(me.orientation, *dir);
  std::vector<std::uint8_t> mark(st.terrain.size(), 0);
  for (const Position t : targets) {
    for (const Position p : firing_positions(world, t, range)) mark[st.index(p)] = 1;
  }
  return step_toward(world, player, [&](Position p) { return mark[st.index(p)] != 0; });
}

}  // namespace socialgrid::nav
