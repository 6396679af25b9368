#include "socialgrid/matrix/matrix_game.hpp"

#include <stdexcept>
#include <string>

namespace socialgrid {

namespace {

std::vector<double> flatten(const std::vector<std::vector<double>>& m) {
  const std::size_t k = m.size();
  if (k == 0) throw std::invalid_argument("payoff matrix must be non-empty");
  std::vector<double> out;
  out.reserve(k * k);
  for (const auto& row : m) {
    if (row.size() != k) throw std::invalid_argument("payoff matrix must be square");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

PayoffMatrix PayoffMatrix::symmetric(std::vector<std::vector<double>> a_row) {
  PayoffMatrix m;
  m.k_ = a_row.size();
  m.symmetric_ = true;
  m.a_row_ = flatten(a_row);
  m.a_col_.resize(m.k_ * m.k_);
  for (std::size_t i = 0; i < m.k_; ++i)
    for (std::size_t j = 0; j < m.k_; ++j) m.a_col_[i * m.k_ + j] = m.a_row_[j * m.k_ + i];
  return m;
}

PayoffMatrix PayoffMatrix::asymmetric(std::vector<std::vector<double>> a_row, std::vector<std::vector<double>> a_col) {
  PayoffMatrix m;
  m.k_ = a_row.size();
  m.a_row_ = flatten(a_row);
  m.a_col_ = flatten(a_col);
  if (m.a_col_.size() != m.a_row_.size()) throw std::invalid_argument("row and column matrices differ in size");
  return m;
}

std::optional<std::vector<double>> mixed_strategy(const Inventory& inventory) {
  const double total = inventory.total();
  if (!(total > 0.0)) return std::nullopt;
  std::vector<double> v(inventory.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = inventory[i] / total;
  return v;
}

std::optional<InteractionPayoff> resolve_interaction(const Inventory& row_inv, const Inventory& col_inv,
                                                     const PayoffMatrix& m) {
  if (row_inv.size() != m.k() || col_inv.size() != m.k()) {
    throw std::invalid_argument("inventory sizes (" + std::to_string(row_inv.size()) + ", " +
                                std::to_string(col_inv.size()) + ") do not match payoff matrix K=" +
                                std::to_string(m.k()));
  }
  const auto v_row = mixed_strategy(row_inv);
  const auto v_col = mixed_strategy(col_inv);
  if (!v_row || !v_col) return std::nullopt;
  // Both sums use the same term order so that antisymmetric games cancel exactly.
  InteractionPayoff out;
  for (std::size_t i = 0; i < m.k(); ++i) {
    for (std::size_t j = 0; j < m.k(); ++j) {
      const double w = (*v_row)[i] * (*v_col)[j];
      out.row += w * m.row(i, j);
      out.col += w * m.col(i, j);
    }
  }
  return out;
}

int dominant_choice(const std::vector<double>& weights) {
  int best = -1;
  double best_w = -1.0;
  bool shared = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > best_w) {
      best = static_cast<int>(i);
      best_w = weights[i];
      shared = false;
    } else if (weights[i] == best_w) {
      shared = true;
    }
  }
  return shared ? -1 : best;
}

}  // namespace socialgrid
