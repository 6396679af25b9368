#ifndef SOCIALGRID_CORE_INVENTORY_HPP_
#define SOCIALGRID_CORE_INVENTORY_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace socialgrid {

// Resource counts picked up since the last respawn. Entries are nonnegative.
class Inventory {
 public:
  Inventory() = default;
  explicit Inventory(std::size_t k) : counts_(k, 0.0) {}
  Inventory(std::initializer_list<double> counts);
  explicit Inventory(std::vector<double> counts);

  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  double operator[](std::size_t i) const { return counts_[i]; }
  std::span<const double> counts() const { return counts_; }

  void add(std::size_t i, double amount = 1.0);
  double total() const;

  bool operator==(const Inventory&) const = default;

 private:
  std::vector<double> counts_;
};

}  // namespace socialgrid

#endif  // SOCIALGRID_CORE_INVENTORY_HPP_
