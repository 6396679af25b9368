#ifndef SOCIALGRID_METRICS_ELO_HPP_
#define SOCIALGRID_METRICS_ELO_HPP_

#include <string>
#include <vector>

namespace socialgrid {

// Pairwise results between populations. wins[i][j] counts matches i won
// against j; draws is symmetric.
struct MatchTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> wins;
  std::vector<std::vector<double>> draws;

  explicit MatchTable(std::vector<std::string> population_names = {});
  std::size_t size() const { return names.size(); }
  void add(std::size_t a, std::size_t b, double score_a, double score_b);  // higher score wins
};

struct EloOptions {
  double prior_draws = 1.0;  // pseudo-draws added to every compared pair
  double tolerance = 1e-8;   // max relative change of any strength
  int max_iterations = 100000;
};

struct EloFit {
  std::vector<double> strength;    // Bradley-Terry, geometric mean 1 per component
  std::vector<double> elo;         // 400 log10(strength), mean 0 per component
  std::vector<double> normalized;  // min-max over all populations
  std::vector<int> component;
  int iterations = 0;
  bool converged = false;
  std::vector<std::string> warnings;
};

// Bradley-Terry maximum likelihood by minorization-maximization. Draws count
// as half a win for each side.
EloFit fit_elo(const MatchTable& table, const EloOptions& options = {});

// P(a beats b) implied by Elo ratings.
double elo_win_probability(double elo_a, double elo_b);

}  // namespace socialgrid

#endif  // SOCIALGRID_METRICS_ELO_HPP_
