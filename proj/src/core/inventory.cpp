#include "socialgrid/core/inventory.hpp"

#include <numeric>
#include <stdexcept>

namespace socialgrid {

Inventory::Inventory(std::initializer_list<double> counts) : Inventory(std::vector<double>(counts)) {}

Inventory::Inventory(std::vector<double> counts) : counts_(std::move(counts)) {
  for (double c : counts_) {
    if (!(c >= 0.0)) throw std::invalid_argument("inventory counts must be nonnegative");
  }
}

void Inventory::add(std::size_t i, double amount) {
  if (i >= counts_.size()) throw std::out_of_range("inventory index out of range");
  if (counts_[i] + amount < 0.0) throw std::invalid_argument("inventory count would become negative");
  counts_[i] += amount;
}

double Inventory::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0.0); }

}  // namespace socialgrid
