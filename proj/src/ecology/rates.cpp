#include "socialgrid/ecology/rates.hpp"

#include <algorithm>

namespace socialgrid {

double regrowth_probability(int neighbors) {
  if (neighbors >= 3) return 0.025;
  if (neighbors == 2) return 0.005;
  if (neighbors == 1) return 0.001;
  return 0.0;
}

double ripen_probability(int b) { return std::clamp(5e-6 * b, 0.0, 1.0); }

RiverState cleanup_step(RiverState river, int clean_hits) {
  river.pollution = std::clamp(river.pollution + river.accumulation_rate - river.clean_amount * clean_hits, 0.0, 1.0);
  return river;
}

double apple_spawn_probability(const RiverState& river) {
  if (river.pollution > river.threshold) return 0.0;
  if (river.threshold <= 0.0) return river.max_spawn_probability;
  return river.max_spawn_probability * (1.0 - river.pollution / river.threshold);
}

}  // namespace socialgrid
