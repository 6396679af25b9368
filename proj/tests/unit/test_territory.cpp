#include <doctest.h>

#include <sstream>

#include "socialgrid/territory/team_game.hpp"
#include "socialgrid/territory/territory.hpp"
#include "support.hpp"

using namespace socialgrid;

namespace {

constexpr const char* kWallMap = R"(legend:
  W wall
  . floor
  P spawn
  R resource_wall
map:
WWWWWWW
W.PR..W
W.P...W
WWWWWWW
)";

// Player 0 at (1,2) facing the resource wall at (1,3).
std::unique_ptr<Territory> staged(int players, std::uint64_t seed, int episode_length = 1000) {
  auto w = sgtest::build<Territory>("territory", kWallMap, players, {{"episode_length", episode_length}}, seed);
  w->place_avatar(0, {1, 2});
  w->mutable_state().avatars[0].orientation = Orientation::kEast;
  if (players > 1) w->place_avatar(1, {2, 2});
  return w;
}

std::vector<int> act(int players, int p0, int p1 = action::kNoop) {
  std::vector<int> a(players, action::kNoop);
  a[0] = p0;
  if (players > 1) a[1] = p1;
  return a;
}

const Event* find(const Substrate& w, std::string_view name) {
  for (const auto& e : w.state().event_log) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::string hill_map(int hill) {
  // Red base left, blue base right, a hill x 1 strip of hill cells.
  std::ostringstream os;
  os << "legend:\n  W wall\n  . floor\n  H hill\n  r spawn:red\n  u spawn:blue\nmap:\n";
  const int width = hill + 6;
  os << std::string(width, 'W') << "\n";
  os << "Wr." << std::string(hill, 'H') << ".uW\n";
  os << "Wr." << std::string(hill, '.') << ".uW\n";
  os << std::string(width, 'W') << "\n";
  return os.str();
}

}  // namespace

TEST_SUITE("territory") {

TEST_CASE("claimed walls activate exactly 100 steps later") {
  for (int delay_before : {0, 3, 17}) {
    auto w = staged(1, 1);
    for (int i = 0; i < delay_before; ++i) w->step(act(1, action::kNoop));
    w->step(act(1, Territory::kClaim));
    const Event* claimed = find(*w, events::kResourceClaimed);
    REQUIRE(claimed);
    CHECK(claimed->timestep == delay_before);
    const auto& wall = w->resources()[0];
    while (w->state().step < delay_before + 100) {
      CHECK_FALSE(w->is_active(wall));
      CHECK(find(*w, events::kResourceActivated) == nullptr);
      w->step(act(1, action::kNoop));
    }
    // The activation step itself.
    CHECK(w->is_active(wall));
    w->step(act(1, action::kNoop));
    const Event* activated = find(*w, events::kResourceActivated);
    REQUIRE(activated);
    CHECK(activated->timestep - claimed->timestep == 100);
    CHECK(w->is_active(wall));
  }
}

TEST_CASE("walking into a wall claims it") {
  auto w = staged(1, 1);
  w->step(act(1, action::kForward));
  CHECK(w->resources()[0].owner == 0);
}

TEST_CASE("active walls pay 0.01 per step on average") {
  constexpr int kEpisodes = 1000;
  constexpr int kActiveSteps = 200;
  double hits = 0;
  double trials = 0;
  for (int e = 0; e < kEpisodes; ++e) {
    auto w = staged(1, 1000 + e, 100 + kActiveSteps);
    w->step(act(1, Territory::kClaim));
    while (!w->done()) {
      const auto r = w->step(act(1, action::kNoop));
      if (w->state().step - 1 >= 100) {
        ++trials;
        hits += r.rewards[0];
      } else {
        CHECK(r.rewards[0] == 0.0);
      }
    }
  }
  CHECK(trials == kEpisodes * kActiveSteps);
  CHECK(sgtest::within_sigma(hits, trials, 0.01));
}

TEST_CASE("two zaps destroy a wall for good") {
  auto w = staged(2, 1);
  w->step(act(2, Territory::kClaim));
  w->step(act(2, Territory::kZap));
  CHECK(w->resources()[0].damage == 1);
  CHECK_FALSE(w->resources()[0].destroyed());
  w->step(act(2, action::kNoop));
  w->step(act(2, Territory::kZap));
  REQUIRE(w->resources()[0].destroyed());
  CHECK_FALSE(w->resources()[0].owner);
  CHECK(w->destroyed_count() == 1);
  // Nothing brings it back: claims, more zaps, walking through, time.
  double paid = 0;
  for (int t = 0; t < 300; ++t) {
    const int a = t % 3 == 0 ? Territory::kClaim : t % 3 == 1 ? Territory::kZap : action::kNoop;
    const auto r = w->step(act(2, a, Territory::kClaim));
    paid += r.rewards[0] + r.rewards[1];
    const auto& wall = w->resources()[0];
    CHECK(wall.destroyed());
    CHECK_FALSE(wall.owner);
    CHECK_FALSE(w->is_active(wall));
  }
  CHECK(paid == 0.0);
  CHECK(sgtest::count_events(*w, events::kResourceDestroyed) == 1);
}

TEST_CASE("re-claiming restarts the countdown") {
  auto w = staged(2, 1);
  w->step(act(2, Territory::kClaim));
  for (int i = 0; i < 50; ++i) w->step(act(2, action::kNoop));
  // Player 1 takes over from the cell below the wall.
  w->place_avatar(1, {2, 3});
  w->mutable_state().avatars[1].orientation = Orientation::kNorth;
  w->step(act(2, action::kNoop, Territory::kClaim));
  const int reclaimed_at = w->state().step - 1;
  CHECK(w->resources()[0].owner == 1);
  while (w->state().step <= reclaimed_at + 99) {
    CHECK_FALSE(w->is_active(w->resources()[0]));
    w->step(act(2, action::kNoop));
  }
  CHECK(w->is_active(w->resources()[0]));
}

TEST_CASE("zapped players leave for the rest of the episode") {
  auto w = staged(2, 1);
  w->place_avatar(1, {1, 1});
  w->mutable_state().avatars[0].orientation = Orientation::kWest;
  w->step(act(2, Territory::kZap));
  CHECK(w->state().avatars[1].removed_until == kPermanentRemoval);
  for (int i = 0; i < 200; ++i) w->step(act(2, action::kNoop));
  CHECK(w->state().avatars[1].removed());
}

}  // TEST_SUITE

TEST_SUITE("team") {

TEST_CASE("hill control pays each member of the controlling team") {
  auto w = sgtest::build<TeamGame>("king_of_the_hill", hill_map(100), 4);
  REQUIRE(w->hill_cells().size() == 100);
  CHECK(w->team_size(Team::kRed) == 2);
  auto paint = [&](int red) {
    for (int i = 0; i < 100; ++i) w->paint(w->hill_cells()[i], i < red ? Ground::kRed : Ground::kNeutral);
  };
  auto team_reward = [&](const Substrate::StepResult& r, Team t) {
    double s = 0;
    for (int p = 0; p < 4; ++p) s += w->team_of(p) == t ? r.rewards[p] : 0.0;
    return s;
  };

  paint(79);
  auto r = sgtest::step_all(*w, action::kNoop);
  CHECK_FALSE(w->hill_controller());
  CHECK(team_reward(r, Team::kRed) == 0.0);
  CHECK(team_reward(r, Team::kBlue) == 0.0);

  paint(80);
  r = sgtest::step_all(*w, action::kNoop);
  CHECK(w->hill_controller() == Team::kRed);
  CHECK(team_reward(r, Team::kRed) == w->team_size(Team::kRed));
  CHECK(team_reward(r, Team::kBlue) == 0.0);
  CHECK(w->indicator() == Indicator::kRed);

  for (int i = 0; i < 100; ++i) w->paint(w->hill_cells()[i], i < 80 ? Ground::kBlue : Ground::kRed);
  r = sgtest::step_all(*w, action::kNoop);
  CHECK(w->hill_controller() == Team::kBlue);
  CHECK(team_reward(r, Team::kBlue) == w->team_size(Team::kBlue));
  CHECK(team_reward(r, Team::kRed) == 0.0);
}

TEST_CASE("threshold boundary on the shipped hill") {
  auto world = make_substrate(sgtest::registry().substrate("king_of_the_hill"), 1);
  auto& w = dynamic_cast<TeamGame&>(*world);
  const int n = static_cast<int>(w.hill_cells().size());
  // Smallest count reaching 80%.
  const int need = (80 * n + 99) / 100;
  for (int i = 0; i < n; ++i) w.paint(w.hill_cells()[i], i < need - 1 ? Ground::kBlue : Ground::kNeutral);
  CHECK_FALSE(w.hill_controller());
  w.paint(w.hill_cells()[need - 1], Ground::kBlue);
  CHECK(w.hill_controller() == Team::kBlue);
}

TEST_CASE("friendly fire does nothing to teammates") {
  auto w = sgtest::build<TeamGame>("king_of_the_hill", hill_map(10), 4, {{"health_recovery", 0.0}});
  // Players 0 and 1 are red; put them in a line.
  w->place_avatar(0, {2, 3});
  w->place_avatar(1, {2, 5});
  w->mutable_state().avatars[0].orientation = Orientation::kEast;
  const auto before = w->state().avatars[1];
  for (int t = 0; t < 20; ++t) {
    std::vector<int> a(4, action::kNoop);
    a[0] = TeamGame::kZap;
    w->step(a);
    const auto& mate = w->state().avatars[1];
    CHECK(mate.health == before.health);
    CHECK(mate.position == before.position);
    CHECK_FALSE(mate.removed());
  }
  CHECK(sgtest::count_events(*w, events::kPlayerZapped) == 0);
  CHECK(sgtest::count_events(*w, events::kBeamFired) > 0);
}

TEST_CASE("zapping an opponent costs health and eventually removes them") {
  auto w = sgtest::build<TeamGame>("king_of_the_hill", hill_map(10), 4, {{"health_recovery", 0.0}});
  w->place_avatar(0, {2, 3});
  w->place_avatar(2, {2, 5});  // blue
  w->mutable_state().avatars[0].orientation = Orientation::kEast;
  int zapped = 0;
  for (int t = 0; t < 20 && !w->state().avatars[2].removed(); ++t) {
    std::vector<int> a(4, action::kNoop);
    a[0] = TeamGame::kZap;
    w->step(a);
    zapped = sgtest::count_events(*w, events::kPlayerZapped);
  }
  CHECK(w->state().avatars[2].removed());
  CHECK(zapped >= 1);
}

TEST_CASE("opposing paint blocks movement") {
  auto w = sgtest::build<TeamGame>("king_of_the_hill", hill_map(10), 4);
  w->place_avatar(0, {2, 3});
  w->mutable_state().avatars[0].orientation = Orientation::kEast;
  w->paint({2, 4}, Ground::kBlue);
  std::vector<int> a(4, action::kNoop);
  a[0] = action::kForward;
  w->step(a);
  CHECK(w->state().avatars[0].position == Position{2, 3});
  // Standing on opposing paint freezes the avatar in place.
  w->paint({2, 3}, Ground::kBlue);
  w->paint({2, 4}, Ground::kNeutral);
  w->step(a);
  CHECK(w->state().avatars[0].position == Position{2, 3});
}

}  // TEST_SUITE
