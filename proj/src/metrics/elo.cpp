#include "socialgrid/metrics/elo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace socialgrid {

MatchTable::MatchTable(std::vector<std::string> population_names)
    : names(std::move(population_names)),
      wins(names.size(), std::vector<double>(names.size(), 0.0)),
      draws(names.size(), std::vector<double>(names.size(), 0.0)) {}

void MatchTable::add(std::size_t a, std::size_t b, double score_a, double score_b) {
  if (a >= size() || b >= size() || a == b) throw std::invalid_argument("MatchTable::add: bad population index");
  if (score_a > score_b) wins[a][b] += 1.0;
  else if (score_b > score_a) wins[b][a] += 1.0;
  else {
    draws[a][b] += 1.0;
    draws[b][a] += 1.0;
  }
}

double elo_win_probability(double elo_a, double elo_b) { return 1.0 / (1.0 + std::pow(10.0, (elo_b - elo_a) / 400.0)); }

EloFit fit_elo(const MatchTable& table, const EloOptions& options) {
  const std::size_t n = table.size();
  EloFit fit;
  fit.strength.assign(n, 1.0);
  fit.elo.assign(n, 0.0);
  fit.normalized.assign(n, 0.5);
  fit.component.assign(n, -1);
  if (n == 0) {
    fit.converged = true;
    return fit;
  }
  std::vector<std::vector<double>> games(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> score(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double played = table.wins[i][j] + table.wins[j][i] + table.draws[i][j];
      if (played <= 0.0) continue;
      games[i][j] = played + options.prior_draws;
      score[i][j] = table.wins[i][j] + 0.5 * (table.draws[i][j] + options.prior_draws);
    }
  }
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (fit.component[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    fit.component[s] = ncomp;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (games[i][j] > 0.0 && fit.component[j] < 0) {
          fit.component[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp > 1) {
    fit.warnings.push_back("comparison graph has " + std::to_string(ncomp) +
                           " components; ratings are only comparable within a component");
  }

  std::vector<double>& p = fit.strength;
  std::vector<double> next(n);
  for (fit.iterations = 0; fit.iterations < options.max_iterations; ++fit.iterations) {
    for (std::size_t i = 0; i < n; ++i) {
      double w = 0.0;
      double denom = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (games[i][j] <= 0.0) continue;
        w += score[i][j];
        denom += games[i][j] / (p[i] + p[j]);
      }
      next[i] = denom > 0.0 ? w / denom : p[i];
    }
    for (int c = 0; c < ncomp; ++c) {
      double log_sum = 0.0;
      int count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (fit.component[i] != c) continue;
        log_sum += std::log(next[i]);
        ++count;
      }
      const double scale = std::exp(-log_sum / count);
      for (std::size_t i = 0; i < n; ++i) {
        if (fit.component[i] == c) next[i] *= scale;
      }
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(next[i] - p[i]) / p[i]);
    p.swap(next);
    if (change < options.tolerance) {
      fit.converged = true;
      ++fit.iterations;
      break;
    }
  }
  if (!fit.converged) fit.warnings.push_back("Bradley-Terry iterations did not converge");

  for (std::size_t i = 0; i < n; ++i) fit.elo[i] = 400.0 * std::log10(p[i]);
  const auto [lo, hi] = std::minmax_element(fit.elo.begin(), fit.elo.end());
  const double span = *hi - *lo;
  for (std::size_t i = 0; i < n; ++i) fit.normalized[i] = span > 0.0 ? (fit.elo[i] - *lo) / span : 0.5;
  return fit;
}

}  // namespace socialgrid
