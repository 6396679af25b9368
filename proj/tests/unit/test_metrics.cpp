#include <doctest.h>

#include <random>

#include "socialgrid/metrics/elo.hpp"
#include "socialgrid/metrics/metrics.hpp"

using namespace socialgrid;

namespace {

double brute_force_equality(const std::vector<double>& r) {
  const std::size_t m = r.size();
  double total = 0.0;
  for (double v : r) total += std::max(0.0, v);
  double d = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) d += std::abs(std::max(0.0, r[i]) - std::max(0.0, r[j]));
  }
  return 1.0 - d / (2.0 * static_cast<double>(m) * total);
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("equality fixed points") {
  CHECK(*positive_income_equality(std::vector<double>{2, 2, 2}) == 1.0);
  CHECK(*positive_income_equality(std::vector<double>{4, 0}) == 0.5);
  CHECK(*positive_income_equality(std::vector<double>{4, -3}) == 0.5);
  CHECK(*positive_income_equality(std::vector<double>{0, 0, 0, 9}) == 0.25);
  CHECK_FALSE(positive_income_equality(std::vector<double>{0, -1, 0}));
  CHECK_THROWS(positive_income_equality(std::vector<double>{}));
}

TEST_CASE("equality matches the brute-force double sum") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> size(1, 64);
  std::uniform_int_distribution<int> value(-40, 200);
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> r(size(gen));
    // Integer and eighth-step values keep every partial sum exact.
    const double scale = trial % 2 ? 1.0 : 0.125;
    for (auto& x : r) x = value(gen) * scale;
    const auto got = positive_income_equality(r);
    double total = 0.0;
    for (double v : r) total += std::max(0.0, v);
    if (total == 0.0) {
      CHECK_FALSE(got);
      continue;
    }
    REQUIRE(got);
    CHECK(*got == brute_force_equality(r));
    ++compared;
  }
  CHECK(compared > 900);
}

TEST_CASE("equality on arbitrary reals agrees to rounding") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> value(-5.0, 50.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> r(1 + trial % 64);
    for (auto& x : r) x = value(gen);
    const auto got = positive_income_equality(r);
    if (!got) continue;
    CHECK(*got == doctest::Approx(brute_force_equality(r)).epsilon(1e-12));
  }
}

TEST_CASE("equality with a single earner is one over m") {
  for (int m = 1; m <= 64; ++m) {
    std::vector<double> r(m, 0.0);
    r[m / 2] = 3.5;
    CHECK(*positive_income_equality(r) == doctest::Approx(1.0 / m));
  }
}

TEST_CASE("normalized score") {
  CHECK(normalize_score(5, 0, 10).value == 0.5);
  const auto over = normalize_score(15, 0, 10);
  CHECK(over.value == 1.0);
  CHECK(over.overflow);
  const auto under = normalize_score(-1, 0, 10);
  CHECK(under.value == 0.0);
  CHECK(under.overflow);
  const auto flat = normalize_score(3, 2, 2);
  CHECK(flat.degenerate);
  CHECK(flat.value == 0.5);
  CHECK_THROWS(normalize_score(1, 3, 2));
}

TEST_CASE("per-capita metrics over background seats") {
  EpisodeResult r;
  r.c = {1, 0, 0, 1};
  r.returns = {10, 3, 5, 20};
  CHECK(background_per_capita(r) == 4.0);
  CHECK(background_returns(r) == std::vector<double>{3, 5});
  r.c = {1, 1, 1, 1};
  CHECK_THROWS(background_per_capita(r));
}

TEST_CASE("Bradley-Terry recovery from synthetic matches") {
  const std::vector<double> strength{1, 2, 4, 8};
  constexpr int kMatches = 10000;
  MatchTable table({"s1", "s2", "s4", "s8"});
  std::mt19937_64 gen(4242);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double p = strength[i] / (strength[i] + strength[j]);
      for (int k = 0; k < kMatches; ++k) {
        const bool i_wins = u(gen) < p;
        table.add(i, j, i_wins ? 1 : 0, i_wins ? 0 : 1);
      }
    }
  }
  const auto fit = fit_elo(table);
  CHECK(fit.converged);
  for (std::size_t i = 0; i + 1 < 4; ++i) CHECK(fit.elo[i] < fit.elo[i + 1]);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double truth = strength[i] / (strength[i] + strength[j]);
      const double sigma = std::sqrt(truth * (1 - truth) / kMatches);
      const double fitted = elo_win_probability(fit.elo[i], fit.elo[j]);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(std::abs(fitted - truth) <= 3 * sigma);
    }
  }
  CHECK(fit.normalized[0] == 0.0);
  CHECK(fit.normalized[3] == 1.0);
}

TEST_CASE("Elo win probability is logistic in rating difference") {
  CHECK(elo_win_probability(0, 0) == doctest::Approx(0.5));
  CHECK(elo_win_probability(400, 0) == doctest::Approx(10.0 / 11.0));
  CHECK(elo_win_probability(0, 400) + elo_win_probability(400, 0) == doctest::Approx(1.0));
}

TEST_CASE("draws count half for each side") {
  MatchTable t({"a", "b"});
  for (int i = 0; i < 50; ++i) t.add(0, 1, 1, 1);
  const auto fit = fit_elo(t);
  CHECK(fit.elo[0] == doctest::Approx(fit.elo[1]));
}

}  // TEST_SUITE
