// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// fails. Usage: socialgrid_acceptance [data_dir] [--only NAME]
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "socialgrid/core/ascii_map.hpp"
#include "socialgrid/ecology/allelopathic_harvest.hpp"
#include "socialgrid/ecology/commons_harvest.hpp"
#include "socialgrid/harness/evaluation.hpp"
#include "socialgrid/harness/registry.hpp"
#include "socialgrid/matrix/matrix_game.hpp"
#include "socialgrid/matrix/matrix_substrate.hpp"
#include "socialgrid/metrics/elo.hpp"
#include "socialgrid/metrics/metrics.hpp"
#include "socialgrid/substrates.hpp"
#include "socialgrid/territory/team_game.hpp"
#include "socialgrid/territory/territory.hpp"

using namespace socialgrid;
namespace fs = std::filesystem;

namespace {

// Tolerances and sizes.
constexpr double kSigmas = 3.0;
constexpr double kMixedTolerance = 1e-12;
constexpr double kMatrixSeconds = 1.0;
constexpr int kMixedTrialsPerMatrix = 2000;
constexpr int kRegrowthTrials = 100000;
constexpr double kRegrowthSeconds = 60.0;
constexpr int kRipenTrials = 100000;
constexpr int kEqualityVectors = 1000;
constexpr int kEqualityMaxM = 64;
constexpr int kTerritoryEpisodes = 1000;
constexpr int kTerritoryActiveSteps = 200;
constexpr int kTerritoryDelay = 100;
constexpr double kTerritoryRate = 0.01;
constexpr int kEloMatches = 10000;
constexpr double kMinStepsPerSecond = 10000.0;
constexpr int kThroughputSteps = 200000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Checker {
  Outcome out;
  void require(bool ok, const std::string& what) {
    if (!ok && out.pass) {
      out.pass = false;
      out.detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << x;
  return os.str();
}

bool within_sigma(double hits, double trials, double p) {
  const double sigma = std::sqrt(trials * p * (1.0 - p));
  if (sigma == 0.0) return hits == trials * p;
  return std::abs(hits - trials * p) <= kSigmas * sigma;
}

SubstrateSpec inline_spec(const std::string& kind, const std::string& map, int players, nlohmann::json params) {
  params["id"] = "acceptance_" + kind;
  params["kind"] = kind;
  params["players"] = players;
  return SubstrateSpec::from_json(params, AsciiMap::parse(map));
}

template <class T>
std::unique_ptr<T> build(const std::string& kind, const std::string& map, int players, nlohmann::json params,
                         std::uint64_t seed) {
  auto w = make_substrate(inline_spec(kind, map, players, std::move(params)), seed);
  auto* raw = dynamic_cast<T*>(w.get());
  if (!raw) throw std::logic_error("unexpected substrate type");
  w.release();
  return std::unique_ptr<T>(raw);
}

Substrate::StepResult step_all(Substrate& w, int a) {
  const std::vector<int> joint(w.num_players(), a);
  return w.step(joint);
}

// ---------------------------------------------------------------------------

Outcome matrix_oracle(const Registry& reg) {
  Checker c;
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<int> count(0, 9);
  int matrices = 0;
  long pure = 0;
  long mixed = 0;
  double worst = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& id : reg.substrate_ids()) {
    const auto& s = reg.substrate(id);
    if (s.kind != "matrix") continue;
    ++matrices;
    const auto& mj = s.params.at("matrix");
    const auto row = mj.at("row").get<std::vector<std::vector<double>>>();
    const std::size_t k = row.size();
    std::vector<std::vector<double>> col(k, std::vector<double>(k));
    if (mj.value("symmetric", true)) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) col[i][j] = row[j][i];
      }
    } else {
      col = mj.at("col").get<std::vector<std::vector<double>>>();
    }
    const auto m = MatrixSubstrateSpec::from_json(s.params).matrix;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> a(k, 0.0), b(k, 0.0);
        a[i] = 2;
        b[j] = 5;
        const auto r = resolve_interaction(Inventory(a), Inventory(b), m);
        c.require(r && r->row == row[i][j] && r->col == col[i][j], id + ": pure pair differs from matrix entry");
        ++pure;
      }
    }
    for (int t = 0; t < kMixedTrialsPerMatrix; ++t) {
      std::vector<double> a(k), b(k);
      for (auto& x : a) x = count(gen);
      for (auto& x : b) x = count(gen);
      a[t % k] += 1;
      b[(t / 2) % k] += 1;
      long double sa = 0, sb = 0, er = 0, ec = 0;
      for (double x : a) sa += x;
      for (double x : b) sb += x;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          er += a[i] / sa * row[i][j] * (b[j] / sb);
          ec += a[i] / sa * col[i][j] * (b[j] / sb);
        }
      }
      const auto r = resolve_interaction(Inventory(a), Inventory(b), m);
      c.require(r.has_value(), id + ": mixed pair unresolved");
      if (!r) continue;
      worst = std::max({worst, std::abs(r->row - static_cast<double>(er)), std::abs(r->col - static_cast<double>(ec))});
      ++mixed;
    }
  }
  const double secs = seconds_since(t0);
  c.require(matrices == 8, "expected 8 shipped matrices, found " + std::to_string(matrices));
  c.require(worst <= kMixedTolerance, "mixed error " + fmt(worst) + " > " + fmt(kMixedTolerance));
  c.require(secs < kMatrixSeconds, "took " + fmt(secs) + " s");
  if (c.out.pass) {
    c.out.detail = std::to_string(matrices) + " matrices, " + std::to_string(pure) + " pure pairs exact, " +
                   std::to_string(mixed) + " mixed pairs max err " + fmt(worst, 3) + ", " + fmt(secs, 3) + " s";
  }
  return c.out;
}

Outcome zero_sum(const Registry& reg) {
  Checker c;
  int episodes = 0;
  int encounters = 0;
  auto audit = [&](const std::string& sub, const std::string& focal, const std::string& bg, std::uint64_t seed) {
    const auto& spec = reg.substrate(sub);
    ScenarioConfig cfg;
    cfg.id = "zero_sum_audit";
    cfg.substrate = sub;
    cfg.c.assign(spec.players, 0);
    cfg.c[0] = 1;
    cfg.mode = spec.players == 2 ? ScenarioMode::kHalfAndHalf : ScenarioMode::kVisitor;
    cfg.background = reg.population(sub, bg);
    const auto sc = build_scenario(cfg, spec);
    const auto r = run_episode(sc, reg.population(sub, focal), seed, true);
    double episode_sum = 0.0;
    for (const auto& e : r.events) {
      if (e.name != events::kInteraction) continue;
      ++encounters;
      const double s = e.get("zapper_reward") + e.get("zapped_reward");
      c.require(s == 0.0, sub + ": encounter sums to " + fmt(s));
      episode_sum += s;
    }
    double interaction_rewards = 0.0;
    for (const auto& e : r.events) {
      if (e.name == events::kInteractionOutcome) interaction_rewards += e.get("reward");
    }
    c.require(episode_sum == 0.0, sub + ": episode encounter sum " + fmt(episode_sum));
    c.require(interaction_rewards == 0.0, sub + ": episode interaction rewards sum to " + fmt(interaction_rewards));
    ++episodes;
  };
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (const char* focal : {"rock", "paper", "scissors", "counter"}) {
      audit("running_with_scissors", focal, "rock+paper+scissors+counter", seed);
    }
    audit("arena_running_with_scissors", "counter", "rock+paper+scissors+counter", seed);
  }
  c.require(encounters > 0, "no encounters happened");
  if (c.out.pass) {
    c.out.detail = std::to_string(episodes) + " episodes, " + std::to_string(encounters) + " encounters, all sums exactly 0";
  }
  return c.out;
}

std::string regrowth_map(int n) {
  std::vector<std::string> rows(9, std::string(9, '.'));
  for (auto& r : rows) r.front() = r.back() = 'W';
  rows.front() = rows.back() = std::string(9, 'W');
  rows[1][1] = 'P';
  rows[4][4] = 'e';
  // Neighbours on the radius-2 disk, filled in a fixed order.
  std::vector<Position> disk;
  for (int dr = -2; dr <= 2; ++dr) {
    for (int dc = -2; dc <= 2; ++dc) {
      if ((dr || dc) && dr * dr + dc * dc <= 4) disk.push_back({dr, dc});
    }
  }
  for (int i = 0; i < n; ++i) rows[4 + disk[i].row][4 + disk[i].col] = 'A';
  std::ostringstream os;
  os << "legend:\n  W wall\n  . floor\n  P spawn\n  A apple\n  e apple_empty\nmap:\n";
  for (const auto& r : rows) os << r << "\n";
  return os.str();
}

Outcome regrowth(const Registry&) {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<int, double>> cases{{0, 0.0}, {1, 0.001}, {2, 0.005}, {3, 0.025}, {6, 0.025}};
  std::string detail;
  for (const auto& [n, p] : cases) {
    auto w = build<CommonsHarvest>("commons_harvest", regrowth_map(n), 1, {{"episode_length", kRegrowthTrials + 1}},
                                   100 + n);
    const Position target{4, 4};
    c.require(w->apples_near(target) == n, "patch setup");
    double hits = 0;
    for (int t = 0; t < kRegrowthTrials; ++t) {
      step_all(*w, action::kNoop);
      auto& item = w->mutable_state().item_at(target);
      if (item.kind == ItemKind::kApple) {
        ++hits;
        item = Item{};
      }
    }
    c.require(w->apples_near(target) == n, "patch changed during the run");
    c.require(within_sigma(hits, kRegrowthTrials, p),
              std::to_string(n) + " neighbours: " + fmt(hits / kRegrowthTrials) + " vs " + fmt(p));
    detail += (detail.empty() ? "" : " ") + std::to_string(n) + "n:" + fmt(hits / kRegrowthTrials, 4);
  }
  const double secs = seconds_since(t0);
  c.require(secs < kRegrowthSeconds, "took " + fmt(secs) + " s");
  if (c.out.pass) c.out.detail = detail + " (" + std::to_string(kRegrowthTrials) + " trials each, " + fmt(secs, 3) + " s)";
  return c.out;
}

Outcome ripen(const Registry& reg) {
  Checker c;
  // 60 x 50 field of berries, 1000 of each colour.
  std::ostringstream map;
  map << "legend:\n  W wall\n  . floor\n  P spawn\n  b berry\nmap:\n" << std::string(52, 'W') << "\nWP"
      << std::string(49, '.') << "W\n";
  for (int r = 0; r < 60; ++r) map << 'W' << std::string(50, 'b') << "W\n";
  map << std::string(52, 'W') << "\n";
  auto w = build<AllelopathicHarvest>("allelopathic_harvest", map.str(), 1, {{"episode_length", 1000000}}, 3);
  auto& st = w->mutable_state();
  for (const Position p : w->berry_cells()) st.item_at(p).flags = 0;
  const auto counts = w->color_counts();
  std::array<double, 3> trials{}, hits{};
  while (*std::min_element(trials.begin(), trials.end()) < kRipenTrials) {
    step_all(*w, action::kNoop);
    for (const Position p : w->berry_cells()) {
      auto& item = st.item_at(p);
      trials[item.variant] += 1;
      if (item.flags & 1) hits[item.variant] += 1;
      item.flags = 0;
    }
  }
  c.require(w->color_counts() == counts, "colour counts drifted");
  std::string detail;
  for (int k = 0; k < 3; ++k) {
    const double p = 5e-6 * counts[k];
    c.require(within_sigma(hits[k], trials[k], p),
              "colour " + std::to_string(k) + ": " + fmt(hits[k] / trials[k]) + " vs " + fmt(p));
    detail += (detail.empty() ? "" : " ") + ("b=" + std::to_string(counts[k]) + ":" + fmt(hits[k] / trials[k], 4));
  }
  for (const auto& id : reg.substrate_ids()) {
    const auto& s = reg.substrate(id);
    const int expected = s.kind == "allelopathic_harvest" ? 2000 : 1000;
    auto world = make_substrate(s, 1);
    c.require(world->episode_length() == expected, id + ": episode length " + std::to_string(world->episode_length()));
  }
  auto ah = make_substrate(reg.substrate("allelopathic_harvest"), 2);
  int steps = 0;
  while (!ah->done()) {
    step_all(*ah, action::kNoop);
    ++steps;
  }
  c.require(steps == 2000, "allelopathic episode ran " + std::to_string(steps) + " steps");
  if (c.out.pass) c.out.detail = detail + " vs 5e-6*b; lengths 2000/1000 enforced";
  return c.out;
}

Outcome equality(const Registry&) {
  Checker c;
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> size(1, kEqualityMaxM);
  std::uniform_int_distribution<int> value(-50, 300);
  int compared = 0;
  for (int t = 0; t < kEqualityVectors; ++t) {
    std::vector<double> r(size(gen));
    const double scale = t % 2 ? 1.0 : 0.25;
    for (auto& x : r) x = value(gen) * scale;
    double total = 0;
    for (double x : r) total += std::max(0.0, x);
    const auto got = positive_income_equality(r);
    if (total == 0.0) {
      c.require(!got, "all-nonpositive vector produced a value");
      continue;
    }
    double d = 0;
    for (double a : r) {
      for (double b : r) d += std::abs(std::max(0.0, a) - std::max(0.0, b));
    }
    const double expected = 1.0 - d / (2.0 * static_cast<double>(r.size()) * total);
    c.require(got && *got == expected, "vector " + std::to_string(t) + " differs from the double sum");
    ++compared;
  }
  const auto a = positive_income_equality(std::vector<double>{2, 2, 2});
  const auto b = positive_income_equality(std::vector<double>{4, 0});
  c.require(a && *a == 1.0, "(2,2,2) != 1");
  c.require(b && *b == 0.5, "(4,0) != 0.5");
  if (c.out.pass) c.out.detail = std::to_string(compared) + " vectors exact; (2,2,2)->1, (4,0)->0.5";
  return c.out;
}

Outcome protocol(const Registry& reg) {
  Checker c;
  EpisodeResult r;
  r.c = {1, 1, 0, 0};
  r.returns = {10, 20, 5, 5};
  c.require(focal_per_capita(r) == 15.0, "focal per capita " + fmt(focal_per_capita(r)));
  int checked = 0;
  for (const auto& sid : reg.scenario_ids()) {
    const auto& sc = reg.scenario(sid).scenario;
    if (sc.config.mode != ScenarioMode::kUniversalization) continue;
    std::vector<std::pair<PolicyHandlePtr, double>> entries;
    for (int i = 0; i < 6; ++i) entries.emplace_back(scripted_policy("f" + std::to_string(i), {}), 1.0 / 6);
    const Population focal(entries);
    std::set<std::string> ids;
    for (std::uint64_t seed = 0; seed < 32; ++seed) {
      const auto seats = assign_seats(sc, &focal, seed);
      for (const auto& h : seats.handles) c.require(h == seats.handles[0], sid + ": seats hold different policies");
      ids.insert(seats.handles[0]->id);
      const auto res = run_episode(sc, focal, seed);
      c.require(std::set<std::string>(res.policy_ids.begin(), res.policy_ids.end()).size() == 1,
                sid + ": episode ran several focal identities");
      if (seed >= 3) break;
    }
    ++checked;
  }
  c.require(checked > 0, "no universalization scenarios shipped");
  if (c.out.pass) c.out.detail = "(1,1,0,0),(10,20,5,5)->15; " + std::to_string(checked) + " universalization scenarios share one policy";
  return c.out;
}

Outcome territory(const Registry&) {
  Checker c;
  const std::string map = "legend:\n  W wall\n  . floor\n  P spawn\n  R resource_wall\nmap:\nWWWWWWW\nW.PR..W\nW.P...W\nWWWWWWW\n";
  auto staged = [&](int players, std::uint64_t seed, int length) {
    auto w = build<Territory>("territory", map, players, {{"episode_length", length}}, seed);
    w->place_avatar(0, {1, 2});
    w->mutable_state().avatars[0].orientation = Orientation::kEast;
    if (players > 1) w->place_avatar(1, {2, 2});
    return w;
  };
  auto first = [](const Substrate& w, std::string_view name) -> const Event* {
    for (const auto& e : w.state().event_log) {
      if (e.name == name) return &e;
    }
    return nullptr;
  };
  // Timing.
  for (int delay : {0, 7, 31}) {
    auto w = staged(1, 1, 1000);
    for (int i = 0; i < delay; ++i) step_all(*w, action::kNoop);
    std::vector<int> claim{Territory::kClaim};
    w->step(claim);
    int activated_at = -1;
    while (activated_at < 0 && !w->done()) {
      if (first(*w, events::kResourceActivated)) break;
      c.require(!w->is_active(w->resources()[0]) || w->state().step >= delay + kTerritoryDelay, "active too early");
      step_all(*w, action::kNoop);
    }
    const Event* a = first(*w, events::kResourceActivated);
    const Event* cl = first(*w, events::kResourceClaimed);
    c.require(a && cl && a->timestep - cl->timestep == kTerritoryDelay, "activation not 100 steps after the claim");
  }
  // Reward rate.
  double hits = 0, trials = 0;
  for (int e = 0; e < kTerritoryEpisodes; ++e) {
    auto w = staged(1, 5000 + e, kTerritoryDelay + kTerritoryActiveSteps);
    std::vector<int> claim{Territory::kClaim};
    w->step(claim);
    while (!w->done()) {
      const int t = w->state().step;
      const auto r = step_all(*w, action::kNoop);
      if (t >= kTerritoryDelay) {
        ++trials;
        hits += r.rewards[0];
      } else {
        c.require(r.rewards[0] == 0.0, "inactive wall paid");
      }
    }
  }
  c.require(trials == static_cast<double>(kTerritoryEpisodes) * kTerritoryActiveSteps, "wrong number of active steps");
  c.require(within_sigma(hits, trials, kTerritoryRate), "rate " + fmt(hits / trials) + " vs 0.01");
  // Double zap.
  auto w = staged(2, 1, 1000);
  w->step(std::vector<int>{Territory::kClaim, action::kNoop});
  w->step(std::vector<int>{Territory::kZap, action::kNoop});
  c.require(!w->resources()[0].destroyed(), "one zap destroyed the wall");
  w->step(std::vector<int>{action::kNoop, action::kNoop});
  w->step(std::vector<int>{Territory::kZap, action::kNoop});
  c.require(w->resources()[0].destroyed(), "two zaps did not destroy the wall");
  double paid = 0;
  for (int t = 0; t < 400; ++t) {
    const int a = t % 3 == 0 ? Territory::kClaim : t % 3 == 1 ? Territory::kZap : action::kForward;
    const auto r = w->step(std::vector<int>{a, Territory::kClaim});
    paid += r.rewards[0] + r.rewards[1];
    const auto& wall = w->resources()[0];
    c.require(wall.destroyed() && !wall.owner && !w->is_active(wall), "destroyed wall came back");
  }
  c.require(paid == 0.0, "destroyed wall paid");
  if (c.out.pass) {
    c.out.detail = "activation at +100; rate " + fmt(hits / trials, 5) + " over " + fmt(trials, 7) + " active steps; destruction absorbing";
  }
  return c.out;
}

Outcome team(const Registry& reg) {
  Checker c;
  auto hill_map = [](int hill) {
    std::ostringstream os;
    os << "legend:\n  W wall\n  . floor\n  H hill\n  r spawn:red\n  u spawn:blue\nmap:\n";
    os << std::string(hill + 6, 'W') << "\nWr." << std::string(hill, 'H') << ".uW\nWr." << std::string(hill, '.')
       << ".uW\n" << std::string(hill + 6, 'W') << "\n";
    return os.str();
  };
  auto w = build<TeamGame>("king_of_the_hill", hill_map(100), 4, nlohmann::json::object(), 1);
  auto team_total = [&](const Substrate::StepResult& r, Team t) {
    double s = 0;
    for (int p = 0; p < 4; ++p) s += w->team_of(p) == t ? r.rewards[p] : 0.0;
    return s;
  };
  auto paint = [&](int n, Ground g) {
    for (int i = 0; i < 100; ++i) w->paint(w->hill_cells()[i], i < n ? g : Ground::kNeutral);
  };
  paint(79, Ground::kRed);
  auto r = step_all(*w, action::kNoop);
  c.require(team_total(r, Team::kRed) == 0.0 && team_total(r, Team::kBlue) == 0.0, "79% hill paid");
  paint(80, Ground::kRed);
  r = step_all(*w, action::kNoop);
  c.require(team_total(r, Team::kRed) == w->team_size(Team::kRed) && team_total(r, Team::kBlue) == 0.0,
            "80% hill did not pay team_size");
  paint(80, Ground::kBlue);
  r = step_all(*w, action::kNoop);
  c.require(team_total(r, Team::kBlue) == w->team_size(Team::kBlue) && team_total(r, Team::kRed) == 0.0,
            "blue control did not pay team_size");
  // Shipped hill at its own boundary.
  auto shipped = make_substrate(reg.substrate("king_of_the_hill"), 1);
  auto& k = dynamic_cast<TeamGame&>(*shipped);
  const int n = static_cast<int>(k.hill_cells().size());
  const int need = (80 * n + 99) / 100;
  for (int i = 0; i < n; ++i) k.paint(k.hill_cells()[i], i < need - 1 ? Ground::kRed : Ground::kNeutral);
  c.require(!k.hill_controller(), "shipped hill controlled below 80%");
  k.paint(k.hill_cells()[need - 1], Ground::kRed);
  c.require(k.hill_controller() == Team::kRed, "shipped hill not controlled at 80%");
  // Friendly fire.
  auto f = build<TeamGame>("king_of_the_hill", hill_map(10), 4, {{"health_recovery", 0.0}}, 1);
  f->place_avatar(0, {2, 3});
  f->place_avatar(1, {2, 5});
  f->mutable_state().avatars[0].orientation = Orientation::kEast;
  const auto before = f->state().avatars[1];
  const auto digest_mate = [&] {
    const auto& a = f->state().avatars[1];
    return std::tuple(a.health, a.position, a.orientation, a.removed_until);
  };
  const auto start = digest_mate();
  for (int t = 0; t < 30; ++t) {
    std::vector<int> a(4, action::kNoop);
    a[0] = TeamGame::kZap;
    f->step(a);
    c.require(digest_mate() == start, "friendly fire changed a teammate");
  }
  int zapped = 0;
  for (const auto& e : f->state().event_log) zapped += e.name == events::kPlayerZapped ? 1 : 0;
  c.require(zapped == 0, "friendly fire emitted player_zapped");
  (void)before;
  if (c.out.pass) c.out.detail = "79% pays 0, 80% pays team_size; shipped hill boundary " + std::to_string(need) + "/" + std::to_string(n) + "; friendly fire no-op";
  return c.out;
}

Outcome elo(const Registry&) {
  Checker c;
  const std::vector<double> strength{1, 2, 4, 8};
  MatchTable table({"s1", "s2", "s4", "s8"});
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double p = strength[i] / (strength[i] + strength[j]);
      for (int m = 0; m < kEloMatches; ++m) {
        const bool win = u(gen) < p;
        table.add(i, j, win ? 1 : 0, win ? 0 : 1);
      }
    }
  }
  const auto fit = fit_elo(table);
  c.require(fit.converged, "fit did not converge");
  for (std::size_t i = 0; i + 1 < 4; ++i) c.require(fit.elo[i] < fit.elo[i + 1], "ordering not recovered");
  double worst = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double truth = strength[i] / (strength[i] + strength[j]);
      const double sigma = std::sqrt(truth * (1 - truth) / kEloMatches);
      const double z = std::abs(elo_win_probability(fit.elo[i], fit.elo[j]) - truth) / sigma;
      worst = std::max(worst, z);
    }
  }
  c.require(worst <= kSigmas, "win probability off by " + fmt(worst) + " sigma");
  c.require(fit.normalized[0] == 0.0 && fit.normalized[3] == 1.0, "normalized extremes not {0,1}");
  if (c.out.pass) c.out.detail = "ordering recovered, worst pair " + fmt(worst, 3) + " sigma, normalized {0,1}";
  return c.out;
}

std::vector<std::string> sorted_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::sort(lines.begin(), lines.end());
  return lines;
}

Outcome determinism(const Registry& reg) {
  Checker c;
  const int parallel = std::max(4, static_cast<int>(std::thread::hardware_concurrency()));
  const auto root = fs::temp_directory_path() / ("sg_acceptance_" + std::to_string(std::random_device{}()));
  auto run = [&](int jobs, const std::string& name) {
    EvaluationJob job;
    job.populations = {"noop"};
    job.scenarios = reg.scenario_ids();
    job.episodes = 1;
    job.seed_base = 2024;
    job.jobs = jobs;
    job.out_dir = root / name;
    run_evaluation(reg, job);
    return sorted_lines(job.out_dir / kResultsFile);
  };
  const auto serial = run(1, "serial");
  const auto par = run(parallel, "parallel");
  std::error_code ec;
  fs::remove_all(root, ec);
  c.require(!serial.empty(), "no records written");
  c.require(serial == par, "record sets differ between 1 and " + std::to_string(parallel) + " workers");
  if (c.out.pass) c.out.detail = std::to_string(serial.size()) + " records byte-identical at parallelism 1 and " + std::to_string(parallel);
  return c.out;
}

Outcome qc(const Registry& reg) {
  Checker c;
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& sid : reg.scenario_ids()) {
    const auto& sc = reg.scenario(sid).scenario;
    for (const auto& [h, w] : sc.config.background.entries()) {
      if (h->id == "random" || h->id == "noop") continue;
      pairs.emplace(sc.config.substrate, h->id);
    }
  }
  int passed = 0;
  std::string failures;
  for (const auto& [sub, id] : pairs) {
    const auto& b = reg.bot(sub, id);
    if (!b.qc) {
      c.require(false, sub + "/" + id + " has no QC criterion");
      continue;
    }
    c.require(b.qc->episodes >= 10 && b.qc->episodes <= 30, sub + "/" + id + ": QC episode count out of range");
    const auto rep = qc_run(reg.substrate(sub), b.puppet, *b.qc, reg.resolver(sub), 0);
    if (rep.passed) ++passed;
    else failures += (failures.empty() ? "" : ", ") + sub + "/" + id;
  }
  c.require(failures.empty(), "failed: " + failures);
  if (c.out.pass) c.out.detail = std::to_string(passed) + "/" + std::to_string(pairs.size()) + " background bots pass QC";
  return c.out;
}

Outcome throughput(const Registry& reg) {
  Checker c;
  const auto& spec = reg.substrate("prisoners_dilemma");
  c.require(spec.players == 8, "prisoners_dilemma is not 8-player");
  std::mt19937_64 gen(9);
  auto world = make_substrate(spec, 1);
  std::uniform_int_distribution<int> pick(0, world->num_actions() - 1);
  std::vector<std::vector<int>> joint(4096, std::vector<int>(spec.players));
  for (auto& j : joint) {
    for (auto& a : j) a = pick(gen);
  }
  long steps = 0;
  std::uint64_t episode = 1;
  const auto t0 = std::chrono::steady_clock::now();
  while (steps < kThroughputSteps) {
    if (world->done()) world = make_substrate(spec, ++episode);
    world->step(joint[steps % joint.size()]);
    ++steps;
  }
  const double secs = seconds_since(t0);
  const double rate = steps / secs;
  c.require(rate >= kMinStepsPerSecond, fmt(rate, 6) + " steps/s < " + fmt(kMinStepsPerSecond));
  if (c.out.pass) c.out.detail = fmt(rate, 6) + " steps/s on one core (target " + fmt(kMinStepsPerSecond) + ")";
  return c.out;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path data = Registry::default_data_dir();
  std::string only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) only = argv[++i];
    else data = a;
  }
  const auto reg = Registry::open(data);
  const std::vector<std::pair<const char*, std::function<Outcome(const Registry&)>>> criteria{
      {"matrix-oracle", matrix_oracle},
      {"zero-sum-audit", zero_sum},
      {"regrowth-rates", regrowth},
      {"ripen-law", ripen},
      {"equality-oracle", equality},
      {"protocol-arithmetic", protocol},
      {"territory-timing", territory},
      {"team-mechanics", team},
      {"elo-recovery", elo},
      {"determinism", determinism},
      {"bot-qc", qc},
      {"throughput", throughput},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    if (!only.empty() && only != name) continue;
    Outcome o;
    try {
      o = fn(reg);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
