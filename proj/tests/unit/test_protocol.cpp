#include <doctest.h>

#include <set>

#include "socialgrid/protocol/scenario.hpp"
#include "support.hpp"

using namespace socialgrid;

namespace {

ScenarioConfig config(const std::string& substrate, std::vector<int> c, ScenarioMode mode, Population bg) {
  ScenarioConfig cfg;
  cfg.id = "t";
  cfg.substrate = substrate;
  cfg.c = std::move(c);
  cfg.mode = mode;
  cfg.background = std::move(bg);
  return cfg;
}

}  // namespace

TEST_SUITE("protocol") {

TEST_CASE("focal per-capita return") {
  EpisodeResult r;
  r.c = {1, 1, 0, 0};
  r.returns = {10, 20, 5, 5};
  CHECK(focal_per_capita(r) == 15.0);
  r.c = {0, 0, 0, 1};
  CHECK(focal_per_capita(r) == 5.0);
  r.c = {0, 0, 0, 0};
  CHECK_THROWS(focal_per_capita(r));
}

TEST_CASE("modes must agree with c") {
  const auto& spec = sgtest::registry().substrate("prisoners_dilemma");
  const auto bg = Population::single(noop_policy());
  CHECK_NOTHROW(build_scenario(config("prisoners_dilemma", {1, 0, 0, 0, 0, 0, 0, 0}, ScenarioMode::kVisitor, bg), spec));
  CHECK_NOTHROW(build_scenario(config("prisoners_dilemma", {1, 1, 1, 1, 0, 0, 0, 0}, ScenarioMode::kHalfAndHalf, bg), spec));
  CHECK_NOTHROW(build_scenario(config("prisoners_dilemma", {1, 1, 1, 1, 1, 0, 0, 0}, ScenarioMode::kResident, bg), spec));
  CHECK_NOTHROW(build_scenario(config("prisoners_dilemma", std::vector<int>(8, 1), ScenarioMode::kUniversalization, {}), spec));
  CHECK_THROWS(build_scenario(config("prisoners_dilemma", {1, 1, 1, 1, 1, 0, 0, 0}, ScenarioMode::kVisitor, bg), spec));
  CHECK_THROWS(build_scenario(config("prisoners_dilemma", std::vector<int>(8, 0), ScenarioMode::kVisitor, bg), spec));
  CHECK_THROWS(build_scenario(config("prisoners_dilemma", {1, 0}, ScenarioMode::kHalfAndHalf, bg), spec));
  CHECK_THROWS(build_scenario(config("prisoners_dilemma", {1, 0, 0, 0, 0, 0, 0, 2}, ScenarioMode::kVisitor, bg), spec));
  CHECK_THROWS(build_scenario(config("prisoners_dilemma", {1, 0, 0, 0, 0, 0, 0, 0}, ScenarioMode::kVisitor, {}), spec));
}

TEST_CASE("population weights must form a distribution") {
  CHECK_THROWS(Population({{noop_policy(), 0.5}, {random_policy(), 0.6}}));
  CHECK_THROWS(Population({{noop_policy(), -0.5}, {random_policy(), 1.5}}));
  CHECK_NOTHROW(Population({{noop_policy(), 0.25}, {random_policy(), 0.75}}));
}

TEST_CASE("universalization shares one policy across all seats") {
  const auto& spec = sgtest::registry().substrate("prisoners_dilemma");
  const auto sc = build_scenario(config("prisoners_dilemma", std::vector<int>(8, 1), ScenarioMode::kUniversalization, {}), spec);
  std::vector<std::pair<PolicyHandlePtr, double>> entries;
  for (int i = 0; i < 8; ++i) entries.emplace_back(scripted_policy("p" + std::to_string(i), {}), 1.0 / 8);
  const Population focal(entries);
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const auto seats = assign_seats(sc, &focal, seed);
    for (const auto& h : seats.handles) CHECK(h == seats.handles[0]);
    seen.insert(seats.handles[0]->id);
  }
  CHECK(seen.size() > 1);
}

TEST_CASE("visitor seats draw independently from the focal population") {
  const auto& spec = sgtest::registry().substrate("prisoners_dilemma");
  const auto sc = build_scenario(config("prisoners_dilemma", {1, 1, 1, 0, 0, 0, 0, 0}, ScenarioMode::kVisitor,
                                        Population::single(noop_policy())),
                                 spec);
  const Population focal({{scripted_policy("a", {}), 0.5}, {scripted_policy("b", {}), 0.5}});
  bool mixed = false;
  for (std::uint64_t seed = 0; seed < 64 && !mixed; ++seed) {
    const auto seats = assign_seats(sc, &focal, seed);
    std::set<std::string> ids;
    for (std::size_t p = 0; p < seats.c.size(); ++p) {
      if (seats.c[p] == 1) ids.insert(seats.handles[p]->id);
      else CHECK(seats.handles[p]->id == "noop");
    }
    mixed = ids.size() == 2;
  }
  CHECK(mixed);
}

TEST_CASE("seat shuffle is a permutation that preserves c") {
  const auto& spec = sgtest::registry().substrate("prisoners_dilemma");
  const auto sc = build_scenario(config("prisoners_dilemma", {1, 1, 0, 0, 0, 0, 0, 0}, ScenarioMode::kVisitor,
                                        Population::single(noop_policy())),
                                 spec);
  const auto focal = Population::single(random_policy());
  std::set<std::vector<int>> layouts;
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    const auto s = assign_seats(sc, &focal, seed);
    auto sorted = s.player_of_slot;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 8; ++i) CHECK(sorted[i] == i);
    CHECK(std::count(s.c.begin(), s.c.end(), 1) == 2);
    for (int j = 0; j < 8; ++j) CHECK(s.c[s.player_of_slot[j]] == sc.config.c[j]);
    layouts.insert(s.c);
    const auto again = assign_seats(sc, &focal, seed);
    CHECK(again.player_of_slot == s.player_of_slot);
  }
  CHECK(layouts.size() > 1);
}

TEST_CASE("episodes are reproducible from the seed") {
  const auto& reg = sgtest::registry();
  const auto& entry = reg.scenario("commons_harvest_open_0");
  const auto focal = Population::single(random_policy());
  const auto a = run_episode(entry.scenario, focal, 77);
  const auto b = run_episode(entry.scenario, focal, 77);
  const auto c = run_episode(entry.scenario, focal, 78);
  CHECK(a.event_digest == b.event_digest);
  CHECK(a.state_digest == b.state_digest);
  CHECK(a.returns == b.returns);
  CHECK(a.steps == 1000);
  CHECK(a.state_digest != c.state_digest);
}

TEST_CASE("a failing policy aborts the episode") {
  const auto& spec = sgtest::registry().substrate("prisoners_dilemma");
  const auto sc = build_scenario(config("prisoners_dilemma", {1, 0, 0, 0, 0, 0, 0, 0}, ScenarioMode::kVisitor,
                                        Population::single(noop_policy())),
                                 spec);
  const auto bad = scripted_policy("bad", {1, 2, 99});
  const auto r = run_episode(sc, Population::single(bad), 1);
  CHECK(r.aborted);
  CHECK(r.abort_reason.find("illegal action 99") != std::string::npos);
  CHECK(r.steps == 2);
}

TEST_CASE("external seats validate actions before moving") {
  const auto& spec = sgtest::registry().substrate("prisoners_dilemma");
  const auto sc = build_scenario(config("prisoners_dilemma", {1, 1, 0, 0, 0, 0, 0, 0}, ScenarioMode::kVisitor,
                                        Population::single(random_policy())),
                                 spec);
  EpisodeRunner runner(sc, 3, nullptr);
  CHECK(runner.external_players().size() == 2);
  const auto before = runner.world().digest();
  CHECK_THROWS_AS(runner.step(std::vector<int>{0}), EngineError);
  CHECK_THROWS_AS(runner.step(std::vector<int>{0, 42}), EngineError);
  CHECK(runner.world().digest() == before);
  runner.step(std::vector<int>{1, 1});
  CHECK(runner.world().state().step == 1);
}

}  // TEST_SUITE
