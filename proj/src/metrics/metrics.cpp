#include "socialgrid/metrics/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace socialgrid {

NormalizedScore normalize_score(double raw, double lo, double hi) {
  NormalizedScore s;
  if (hi == lo) {
    s.value = 0.5;
    s.degenerate = true;
    return s;
  }
  if (hi < lo) throw std::invalid_argument("normalize_score: hi must exceed lo");
  const double v = (raw - lo) / (hi - lo);
  s.overflow = v < 0.0 || v > 1.0;
  s.value = std::clamp(v, 0.0, 1.0);
  return s;
}

std::vector<double> background_returns(const EpisodeResult& result) {
  std::vector<double> out;
  for (std::size_t i = 0; i < result.c.size(); ++i) {
    if (result.c[i] == 0) out.push_back(result.returns.at(i));
  }
  return out;
}

double background_per_capita(const EpisodeResult& result) {
  const auto r = background_returns(result);
  if (r.empty()) throw std::invalid_argument("background_per_capita: result has no background players");
  double sum = 0.0;
  for (double v : r) sum += v;
  return sum / static_cast<double>(r.size());
}

std::optional<double> positive_income_equality(std::span<const double> returns) {
  const std::size_t m = returns.size();
  if (m == 0) throw std::invalid_argument("positive_income_equality: no returns");
  std::vector<double> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = std::max(0.0, returns[i]);
  std::sort(x.begin(), x.end());
  double total = 0.0;
  for (double v : x) total += v;
  if (!(total > 0.0)) return std::nullopt;
  // sum_i sum_j |x_i - x_j| = 2 * sum_i (2i - m + 1) x_(i) over ascending order.
  double half = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    half += (2.0 * static_cast<double>(i) - static_cast<double>(m) + 1.0) * x[i];
  }
  return 1.0 - (2.0 * half) / (2.0 * static_cast<double>(m) * total);
}

}  // namespace socialgrid
