#ifndef SOCIALGRID_METRICS_METRICS_HPP_
#define SOCIALGRID_METRICS_METRICS_HPP_

#include <optional>
#include <span>

#include "socialgrid/protocol/scenario.hpp"

namespace socialgrid {

struct NormalizedScore {
  double value = 0.0;
  bool overflow = false;    // raw fell outside [lo, hi] and was clamped
  bool degenerate = false;  // hi == lo; value is 0.5
};

NormalizedScore normalize_score(double raw, double lo, double hi);

// Mean return over background players (c_i = 0). Throws when there are none.
double background_per_capita(const EpisodeResult& result);

// One minus the Gini coefficient of max(0, r_i). Empty when no return is
// positive. With exactly one positive return the value is 1/m.
std::optional<double> positive_income_equality(std::span<const double> returns);

// Background returns of one episode, in player order.
std::vector<double> background_returns(const EpisodeResult& result);

}  // namespace socialgrid

#endif  // SOCIALGRID_METRICS_METRICS_HPP_
