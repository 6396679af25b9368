#include "socialgrid/protocol/policy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace socialgrid {

namespace {

class RandomPolicy final : public Policy {
 public:
  void reset(std::uint64_t seed) override {
    rng_ = CounterRng(seed);
    t_ = 0;
  }
  int act(const StepContext& ctx) override {
    return static_cast<int>(rng_.below(static_cast<std::uint64_t>(ctx.world.num_actions()), Stream::kPolicy, t_++));
  }

 private:
  CounterRng rng_;
  std::uint64_t t_ = 0;
};

class NoopPolicy final : public Policy {
 public:
  void reset(std::uint64_t) override {}
  int act(const StepContext&) override { return action::kNoop; }
};

class ScriptedPolicy final : public Policy {
 public:
  explicit ScriptedPolicy(std::shared_ptr<const std::vector<int>> actions) : actions_(std::move(actions)) {}
  void reset(std::uint64_t) override { t_ = 0; }
  int act(const StepContext&) override { return t_ < actions_->size() ? (*actions_)[t_++] : action::kNoop; }

 private:
  std::shared_ptr<const std::vector<int>> actions_;
  std::size_t t_ = 0;
};

}  // namespace

PolicyHandlePtr make_handle(std::string id, std::function<std::unique_ptr<Policy>()> make) {
  return std::make_shared<const PolicyHandle>(PolicyHandle{std::move(id), std::move(make)});
}

PolicyHandlePtr random_policy() {
  static const PolicyHandlePtr h = make_handle("random", [] { return std::make_unique<RandomPolicy>(); });
  return h;
}

PolicyHandlePtr noop_policy() {
  static const PolicyHandlePtr h = make_handle("noop", [] { return std::make_unique<NoopPolicy>(); });
  return h;
}

PolicyHandlePtr scripted_policy(std::string id, std::vector<int> actions) {
  auto shared = std::make_shared<const std::vector<int>>(std::move(actions));
  return make_handle(std::move(id), [shared] { return std::make_unique<ScriptedPolicy>(shared); });
}

Population::Population(std::vector<std::pair<PolicyHandlePtr, double>> entries) : entries_(std::move(entries)) {
  double total = 0.0;
  for (const auto& [h, w] : entries_) {
    if (!h) throw std::invalid_argument("population entry without a policy handle");
    if (!(w >= 0.0)) throw std::invalid_argument("population weight for '" + h->id + "' is negative");
    total += w;
    cdf_.push_back(total);
  }
  if (!entries_.empty() && std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("population weights sum to " + std::to_string(total) + ", expected 1");
  }
}

Population Population::single(PolicyHandlePtr handle) { return Population({{std::move(handle), 1.0}}); }

const PolicyHandlePtr& Population::sample(const CounterRng& rng, std::uint64_t counter, std::uint64_t slot) const {
  if (entries_.empty()) throw std::invalid_argument("cannot sample from an empty population");
  const double u = rng.uniform(Stream::kPopulationSample, counter, slot) * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  auto i = static_cast<std::size_t>(it - cdf_.begin());
  if (i >= entries_.size()) i = entries_.size() - 1;
  return entries_[i].first;
}

std::vector<PolicyHandlePtr> sample_joint_policy(const Population& f, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("joint policy needs at least one player");
  if (f.empty()) throw std::invalid_argument("cannot sample from an empty population");
  const CounterRng rng(seed);
  std::vector<PolicyHandlePtr> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(f.sample(rng, 0, static_cast<std::uint64_t>(i)));
  return out;
}

}  // namespace socialgrid
