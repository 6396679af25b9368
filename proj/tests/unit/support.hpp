#ifndef SOCIALGRID_TESTS_SUPPORT_HPP_
#define SOCIALGRID_TESTS_SUPPORT_HPP_

#include <cmath>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "socialgrid/core/ascii_map.hpp"
#include "socialgrid/core/substrate.hpp"
#include "socialgrid/harness/registry.hpp"
#include "socialgrid/substrates.hpp"

namespace sgtest {

inline std::filesystem::path data_dir() { return SOCIALGRID_TEST_DATA; }

inline const socialgrid::Registry& registry() {
  static const auto reg = socialgrid::Registry::open(data_dir());
  return reg;
}

inline socialgrid::SubstrateSpec spec(const std::string& kind, const std::string& map_text, int players,
                                      nlohmann::json params = nlohmann::json::object()) {
  if (params.is_null()) params = nlohmann::json::object();
  params["id"] = params.value("id", "test_" + kind);
  params["kind"] = kind;
  params["players"] = players;
  return socialgrid::SubstrateSpec::from_json(params, socialgrid::AsciiMap::parse(map_text));
}

template <class T>
std::unique_ptr<T> build(const std::string& kind, const std::string& map_text, int players,
                         nlohmann::json params = nlohmann::json::object(), std::uint64_t seed = 1) {
  auto world = socialgrid::make_substrate(spec(kind, map_text, players, std::move(params)), seed);
  auto* raw = dynamic_cast<T*>(world.get());
  if (!raw) throw std::logic_error("wrong substrate type");
  world.release();
  return std::unique_ptr<T>(raw);
}

inline socialgrid::Substrate::StepResult step_all(socialgrid::Substrate& w, int action) {
  const std::vector<int> a(w.num_players(), action);
  return w.step(a);
}

inline int count_events(const socialgrid::Substrate& w, std::string_view name) {
  int n = 0;
  for (const auto& e : w.state().event_log) n += e.name == name ? 1 : 0;
  return n;
}

// |observed - expected| within k binomial standard deviations.
inline bool within_sigma(double hits, double trials, double p, double k = 3.0) {
  const double sigma = std::sqrt(trials * p * (1.0 - p));
  if (sigma == 0.0) return hits == trials * p;
  return std::abs(hits - trials * p) <= k * sigma;
}

}  // namespace sgtest

#endif  // SOCIALGRID_TESTS_SUPPORT_HPP_
