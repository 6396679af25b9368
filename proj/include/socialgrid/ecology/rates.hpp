#ifndef SOCIALGRID_ECOLOGY_RATES_HPP_
#define SOCIALGRID_ECOLOGY_RATES_HPP_

#include <array>

#include "socialgrid/core/types.hpp"

namespace socialgrid {

// Offsets within L2 distance 2 of a cell, excluding the cell itself.
inline constexpr std::array<Position, 12> kAppleNeighborhood = {{
    {-2, 0}, {-1, -1}, {-1, 0}, {-1, 1}, {0, -2}, {0, -1},
    {0, 1},  {0, 2},   {1, -1}, {1, 0},  {1, 1},  {2, 0},
}};

// Per-step apple regrowth probability at an empty apple cell with
// `neighbors` apples within radius 2.
double regrowth_probability(int neighbors);

// Per-step ripening probability of an unripe berry whose color currently has
// `b` plants on the map: 5e-6 * b, clamped to [0, 1].
double ripen_probability(int b);

struct RiverState {
  double pollution = 0.0;
  double accumulation_rate = 0.001;
  double clean_amount = 0.02;
  double threshold = 0.4;
  double max_spawn_probability = 0.05;
};

// One step of river dynamics with `clean_hits` successful cleaning beams.
RiverState cleanup_step(RiverState river, int clean_hits);

// Orchard spawn probability: zero above the threshold, otherwise falling
// linearly from the maximum at zero pollution.
double apple_spawn_probability(const RiverState& river);

}  // namespace socialgrid

#endif  // SOCIALGRID_ECOLOGY_RATES_HPP_
