#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "socialgrid/harness/evaluation.hpp"
#include "socialgrid/harness/render.hpp"
#include "socialgrid/harness/report.hpp"
#include "socialgrid/harness/session.hpp"
#include "support.hpp"

using namespace socialgrid;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("sgtest_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::vector<std::string> sorted_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::sort(lines.begin(), lines.end());
  return lines;
}

fs::path copy_data(const TempDir& t) {
  const auto dst = t.path / "data";
  fs::copy(sgtest::data_dir(), dst, fs::copy_options::recursive);
  return dst;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

EvaluationJob small_job(const fs::path& out, int jobs) {
  EvaluationJob job;
  job.populations = {"noop"};
  job.scenarios = {"prisoners_dilemma_0", "commons_harvest_open_0", "clean_up_2", "chemistry_metabolic_cycles_1"};
  job.episodes = 2;
  job.seed_base = 11;
  job.jobs = jobs;
  job.out_dir = out;
  return job;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("shipped registry opens") {
  const auto& reg = sgtest::registry();
  CHECK(reg.substrate_ids().size() == 19);
  CHECK(reg.scenario_ids().size() >= 19);
  for (const auto& sid : reg.scenario_ids()) {
    const auto& e = reg.scenario(sid);
    CHECK(e.episodes >= 1);
    CHECK(reg.substrate(e.scenario.config.substrate).players == e.scenario.num_players());
  }
  CHECK_THROWS_AS(reg.scenario("nope"), ConfigError);
  CHECK_THROWS_AS(reg.substrate("nope"), ConfigError);
  CHECK_THROWS_AS(reg.bot("clean_up", "nope"), ConfigError);
}

TEST_CASE("broken registries are rejected") {
  TempDir t;
  CHECK_THROWS_AS(Registry::open(t.path / "missing"), ConfigError);
  SUBCASE("unknown background bot") {
    const auto d = copy_data(t);
    write(d / "scenarios" / "zz.json",
          R"({"scenarios":[{"id":"zz","substrate":"clean_up","c":[1,0,0,0,0,0,0],"mode":"visitor",)"
          R"("background":[{"bot":"ghost","weight":1}]}]})");
    CHECK_THROWS_AS(Registry::open(d), ConfigError);
  }
  SUBCASE("mode does not match c") {
    const auto d = copy_data(t);
    write(d / "scenarios" / "zz.json",
          R"({"scenarios":[{"id":"zz","substrate":"clean_up","c":[1,1,1,1,1,0,0],"mode":"visitor",)"
          R"("background":[{"bot":"cleaner","weight":1}]}]})");
    CHECK_THROWS_AS(Registry::open(d), ConfigError);
  }
  SUBCASE("duplicate scenario") {
    const auto d = copy_data(t);
    write(d / "scenarios" / "zz.json",
          R"({"scenarios":[{"id":"clean_up_0","substrate":"clean_up","c":[1,0,0,0,0,0,0],"mode":"visitor",)"
          R"("background":[{"bot":"cleaner","weight":1}]}]})");
    CHECK_THROWS_AS(Registry::open(d), ConfigError);
  }
  SUBCASE("malformed json") {
    const auto d = copy_data(t);
    write(d / "scenarios" / "zz.json", "{");
    CHECK_THROWS_AS(Registry::open(d), ConfigError);
  }
  SUBCASE("bad bot behaviour") {
    const auto d = copy_data(t);
    write(d / "bots" / "zz.json", R"({"substrate":"clean_up","bots":[{"id":"x","default":"levitate"}]})");
    CHECK_THROWS_AS(Registry::open(d), ConfigError);
  }
}

TEST_CASE("population specs") {
  const auto& reg = sgtest::registry();
  const auto pop = reg.population("clean_up", "cleaner+harvester");
  CHECK(pop.entries().size() == 2);
  CHECK_THROWS_AS(reg.population("clean_up", "cleaner+"), ConfigError);
  CHECK_THROWS_AS(reg.population("clean_up", "ghost"), ConfigError);
  CHECK(reg.population("clean_up", "random").entries().size() == 1);
}

TEST_CASE("evaluation is independent of parallelism") {
  TempDir t;
  const auto a = run_evaluation(sgtest::registry(), small_job(t.path / "a", 1));
  const auto b = run_evaluation(sgtest::registry(), small_job(t.path / "b", 4));
  CHECK(a.ran == 16);  // noop and the random anchor
  CHECK(b.ran == 16);
  CHECK(sorted_lines(a.results) == sorted_lines(b.results));
}

TEST_CASE("episode seeds do not depend on the population") {
  CHECK(episode_seed(1, "x", 0) == episode_seed(1, "x", 0));
  CHECK(episode_seed(1, "x", 0) != episode_seed(1, "x", 1));
  CHECK(episode_seed(1, "x", 0) != episode_seed(1, "y", 0));
  CHECK(episode_seed(1, "x", 0) != episode_seed(2, "x", 0));
}

TEST_CASE("evaluation resumes") {
  TempDir t;
  auto job = small_job(t.path, 2);
  const auto first = run_evaluation(sgtest::registry(), job);
  const auto again = run_evaluation(sgtest::registry(), job);
  CHECK(again.ran == 0);
  CHECK(again.skipped == first.ran);

  // Simulate a crash mid-write: drop the last record and leave half a line.
  auto lines = sorted_lines(first.results);
  {
    std::ifstream in(first.results);
    std::vector<std::string> raw;
    for (std::string l; std::getline(in, l);) raw.push_back(l);
    std::ofstream out(first.results, std::ios::trunc);
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) out << raw[i] << '\n';
    out << raw.back().substr(0, raw.back().size() / 2);
  }
  CHECK(read_records(first.results).size() == lines.size() - 1);
  const auto resumed = run_evaluation(sgtest::registry(), job);
  CHECK(resumed.ran == 1);
  CHECK(sorted_lines(first.results) == lines);
}

TEST_CASE("unknown ids fail before any episode runs") {
  TempDir t;
  auto job = small_job(t.path, 1);
  job.populations = {"ghost"};
  CHECK_THROWS_AS(run_evaluation(sgtest::registry(), job), ConfigError);
  CHECK_FALSE(fs::exists(t.path / kResultsFile));
  job.populations = {"noop"};
  job.scenarios.push_back("nope");
  CHECK_THROWS_AS(run_evaluation(sgtest::registry(), job), ConfigError);
  CHECK_FALSE(fs::exists(t.path / kResultsFile));
}

TEST_CASE("records") {
  TempDir t;
  run_evaluation(sgtest::registry(), small_job(t.path, 2));
  for (const auto& r : read_records(t.path / kResultsFile)) {
    CAPTURE(r.dump());
    const auto c = r.at("c").get<std::vector<int>>();
    const auto ret = r.at("returns").get<std::vector<double>>();
    double sum = 0;
    int m = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i]) {
        sum += ret[i];
        ++m;
      }
    }
    CHECK(r.at("focal_per_capita").get<double>() == doctest::Approx(sum / m).epsilon(1e-12));
    if (r.at("mode") == "universalization") CHECK(r.at("background_per_capita").is_null());
    else CHECK_FALSE(r.at("background_per_capita").is_null());
  }
}

TEST_CASE("report") {
  TempDir t;
  auto job = small_job(t.path, 2);
  job.populations = {"noop", "cleaner"};
  job.scenarios = {"clean_up_0", "clean_up_2"};
  run_evaluation(sgtest::registry(), job);
  const auto rep = build_report(read_records(t.path / kResultsFile), &sgtest::registry());
  CHECK(rep.rows.size() == 6);
  for (const auto& row : rep.rows) {
    CAPTURE(row.population);
    CAPTURE(row.scenario);
    CHECK(row.episodes == 2);
    CHECK(row.anchors.lo_source == "random");
    CHECK(row.score.value >= 0.0);
    if (row.mode == "resident") CHECK_FALSE(row.background_per_capita);
    else CHECK(row.background_per_capita);
    if (row.population == "random") CHECK((row.score.value == 0.0 || row.score.degenerate));
  }
  CHECK(rep.elo.elo.size() == 3);
  write_report(rep, t.path);
  CHECK(fs::file_size(t.path / "report.json") > 0);
  std::ifstream csv(t.path / "report.csv");
  int lines = 0;
  for (std::string l; std::getline(csv, l);) ++lines;
  CHECK(lines == 7);
}

TEST_CASE("aborted episodes are counted but excluded") {
  nlohmann::json ok = {{"population", "p"}, {"scenario", "s"}, {"substrate", "x"}, {"mode", "visitor"},
                       {"episode", 0}, {"aborted", false}, {"focal_per_capita", 4.0},
                       {"background_per_capita", 2.0}, {"background_equality", 1.0}};
  auto bad = ok;
  bad["episode"] = 1;
  bad["aborted"] = true;
  bad["focal_per_capita"] = nullptr;
  const auto rep = build_report({ok, bad}, nullptr);
  REQUIRE(rep.rows.size() == 1);
  CHECK(rep.rows[0].episodes == 1);
  CHECK(rep.rows[0].aborted == 1);
  CHECK(rep.rows[0].focal_per_capita == 4.0);
}

TEST_CASE("render reproduces the recorded episode") {
  TempDir t;
  auto job = small_job(t.path, 1);
  job.scenarios = {"prisoners_dilemma_0"};
  job.episodes = 1;
  run_evaluation(sgtest::registry(), job);
  auto rec = read_records(t.path / kResultsFile).at(0);
  const int frames = render_episode(sgtest::registry(), rec, t.path / "frames");
  CHECK(frames == rec.at("steps").get<int>() + 1);
  CHECK(fs::exists(t.path / "frames" / "frame_00000.ppm"));
  rec["seed"] = rec.at("seed").get<std::uint64_t>() + 1;
  CHECK_THROWS_AS(render_episode(sgtest::registry(), rec, t.path / "frames2"), ConfigError);
  CHECK_FALSE(fs::exists(t.path / "frames2"));
}

TEST_CASE("session drives focal seats") {
  auto reg = std::make_shared<const Registry>(sgtest::registry());
  Session s(reg, "clean_up_1", 5);
  CHECK(s.focal_count() == 3);
  const std::vector<int> acts(3, action::kForward);
  CHECK_THROWS_AS(s.step(std::vector<int>(2, 0)), EngineError);
  CHECK_THROWS_AS(s.step(std::vector<int>{0, 0, s.num_actions()}), EngineError);
  CHECK(s.step_count() == 0);
  while (!s.done()) {
    const auto out = s.step(acts);
    CHECK(out.rewards.size() == 3);
  }
  CHECK(s.step_count() == s.episode_length());
  CHECK_THROWS_AS(s.step(acts), EngineError);
  const auto first = s.result();

  s.reset(5);
  while (!s.done()) s.step(acts);
  CHECK(s.result().event_digest == first.event_digest);
  CHECK(s.result().state_digest == first.state_digest);
  CHECK(s.observe(0).pixels.height == 88);
}

}  // TEST_SUITE
