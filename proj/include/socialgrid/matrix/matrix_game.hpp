#ifndef SOCIALGRID_MATRIX_MATRIX_GAME_HPP_
#define SOCIALGRID_MATRIX_MATRIX_GAME_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "socialgrid/core/inventory.hpp"

namespace socialgrid {

// K x K payoff pair for the row and column player. When `symmetric` the
// column matrix is the transpose of the row matrix.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  // Symmetric game: a_col = a_row^T.
  static PayoffMatrix symmetric(std::vector<std::vector<double>> a_row);
  static PayoffMatrix asymmetric(std::vector<std::vector<double>> a_row, std::vector<std::vector<double>> a_col);

  std::size_t k() const { return k_; }
  bool is_symmetric() const { return symmetric_; }
  double row(std::size_t i, std::size_t j) const { return a_row_[i * k_ + j]; }
  double col(std::size_t i, std::size_t j) const { return a_col_[i * k_ + j]; }

 private:
  std::size_t k_ = 0;
  bool symmetric_ = false;
  std::vector<double> a_row_;
  std::vector<double> a_col_;
};

// v_i = rho_i / sum_j rho_j. Empty (all-zero) inventories have no strategy.
std::optional<std::vector<double>> mixed_strategy(const Inventory& inventory);

struct InteractionPayoff {
  double row = 0.0;
  double col = 0.0;
};

// r_row = v_row^T A_row v_col and r_col = v_row^T A_col v_col.
// Returns nullopt when either inventory is empty; throws std::invalid_argument
// on a dimension mismatch.
std::optional<InteractionPayoff> resolve_interaction(const Inventory& row_inv, const Inventory& col_inv,
                                                     const PayoffMatrix& m);

// Index of the strictly largest weight, or -1 when the maximum is shared.
int dominant_choice(const std::vector<double>& weights);

}  // namespace socialgrid

#endif  // SOCIALGRID_MATRIX_MATRIX_GAME_HPP_
