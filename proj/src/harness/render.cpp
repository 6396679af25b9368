#include "socialgrid/harness/render.hpp"

#include <cstdio>

#include "socialgrid/harness/evaluation.hpp"

namespace socialgrid {

namespace fs = std::filesystem;

namespace {

fs::path frame_path(const fs::path& dir, const char* prefix, int t) {
  char name[32];
  std::snprintf(name, sizeof name, "%s_%05d.ppm", prefix, t);
  return dir / name;
}

}  // namespace

int render_episode(const Registry& registry, const nlohmann::json& record, const fs::path& dir,
                   const RenderOptions& options) {
  const auto& entry = registry.scenario(record.at("scenario").get<std::string>());
  const auto& sc = entry.scenario;
  const auto focal = registry.population(sc.config.substrate, record.at("population").get<std::string>());
  const auto seed = record.at("seed").get<std::uint64_t>();

  const auto check = run_episode(sc, focal, seed, false);
  const auto expected = make_record(record.at("population"), entry, record.at("episode"), check);
  if (expected.at("event_digest") != record.at("event_digest") || expected.at("state_digest") != record.at("state_digest")) {
    throw ConfigError("record for " + sc.config.id + " episode " + record.at("episode").dump() +
                      " does not match a re-simulation with seed " + std::to_string(seed));
  }

  fs::create_directories(dir);
  EpisodeRunner runner(sc, seed, &focal);
  int frames = 0;
  auto snapshot = [&] {
    write_ppm(runner.world().render_world(), frame_path(dir, "frame", frames));
    if (options.player_views) {
      for (int p = 0; p < runner.world().num_players(); ++p) {
        const std::string prefix = "p" + std::to_string(p);
        write_ppm(runner.world().observe(p).pixels, frame_path(dir, prefix.c_str(), frames));
      }
    }
    ++frames;
  };
  snapshot();
  while (!runner.done()) {
    runner.step();
    snapshot();
  }
  return frames;
}

}  // namespace socialgrid
