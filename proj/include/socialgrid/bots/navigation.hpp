#ifndef SOCIALGRID_BOTS_NAVIGATION_HPP_
#define SOCIALGRID_BOTS_NAVIGATION_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "socialgrid/core/substrate.hpp"

namespace socialgrid::nav {

using CellPredicate = std::function<bool(Position)>;

// Movement action that steps one cell in absolute direction `dir` without
// turning (forward, backward or a strafe).
int move_action(Orientation facing, Orientation dir);
// One quarter turn toward `want`; noop when already facing it.
int turn_toward(Orientation facing, Orientation want);

// Direction of the first step of a shortest path to the nearest cell
// satisfying `goal`, moving only through unoccupied cells accepted by
// `enterable`. Nullopt when unreachable or already on a goal cell.
std::optional<Orientation> first_direction(const Substrate& world, int player, const CellPredicate& goal,
                                           const CellPredicate& enterable);

// Breadth-first search over cells the player may enter; other avatars block.
// Returns the first movement action of a shortest path to the nearest cell
// satisfying `goal`, or nullopt when none is reachable or the player already
// stands on one. Cells for which `avoid` holds are never entered.
std::optional<int> step_toward(const Substrate& world, int player, const CellPredicate& goal,
                               const CellPredicate& avoid = {});

// Direction from `from` to `to` when both share a row or column, are at most
// `range` apart and no wall lies strictly between them.
std::optional<Orientation> line_of_fire(const Substrate& world, Position from, Position to, int range);

// Cells from which a beam of `range` would reach `target` in a straight line.
std::vector<Position> firing_positions(const Substrate& world, Position target, int range);

// Action that fires (action id `fire`) at the first player accepted by
// `is_target` in line of fire, turning first when needed; otherwise moves
// toward the nearest firing position, keeping off `avoid` cells when some
// path allows it. Nullopt when no target is reachable.
std::optional<int> engage(const Substrate& world, int player, int range, int fire,
                          const std::function<bool(int)>& is_target, const CellPredicate& avoid = {});

// Like engage() but aimed at cells: fires when one of `targets` is in line
// of fire, otherwise walks toward the nearest cell from which one is.
std::optional<int> aim_at_cells(const Substrate& world, int player, int range, int fire,
                                const std::vector<Position>& targets);

int manhattan(Position a, Position b);

}  // namespace socialgrid::nav

#endif  // SOCIALGRID_BOTS_NAVIGATION_HPP_
