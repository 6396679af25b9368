#include "socialgrid/harness/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#ifndef SOCIALGRID_DEFAULT_DATA_DIR
#define SOCIALGRID_DEFAULT_DATA_DIR "data"
#endif

namespace socialgrid {

namespace fs = std::filesystem;

namespace {

nlohmann::json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, _] : m) out.push_back(k);
  return out;
}

}  // namespace

fs::path Registry::default_data_dir() {
  if (const char* env = std::getenv("SOCIALGRID_DATA"); env && *env) return env;
  return SOCIALGRID_DEFAULT_DATA_DIR;
}

Registry Registry::open(const fs::path& root) {
  if (!fs::is_directory(root)) throw ConfigError("data directory " + root.string() + " does not exist");
  Registry reg;
  reg.root_ = root;

  for (const auto& path : json_files(root / "substrates")) {
    try {
      auto j = read_json(path);
      const AsciiMap map = AsciiMap::load(root / j.at("map").get<std::string>());
      if (j.contains("graph") && j.at("graph").is_string()) j["graph"] = read_json(root / j.at("graph").get<std::string>());
      auto spec = SubstrateSpec::from_json(j, map);
      const std::string id = spec.id;
      if (!reg.substrates_.emplace(id, std::move(spec)).second) throw ConfigError("duplicate substrate '" + id + "'");
    } catch (const std::exception& e) {
      throw ConfigError(path.string() + ": " + e.what());
    }
  }

  for (const auto& path : json_files(root / "bots")) {
    try {
      const auto j = read_json(path);
      const auto sub = j.at("substrate").get<std::string>();
      if (!reg.substrates_.count(sub)) throw ConfigError("unknown substrate '" + sub + "'");
      auto& list = reg.bots_[sub];
      for (const auto& b : j.at("bots")) {
        BotEntry entry;
        entry.puppet = PuppetSpec::from_json(b);
        if (b.contains("qc")) entry.qc = QCConfig::from_json(b.at("qc"));
        entry.handle = compile_puppet(entry.puppet);
        const auto dup = std::any_of(list.begin(), list.end(), [&](const BotEntry& o) { return o.puppet.id == entry.puppet.id; });
        if (dup || entry.puppet.id == "random" || entry.puppet.id == "noop") {
          throw ConfigError("duplicate or reserved bot id '" + entry.puppet.id + "'");
        }
        list.push_back(std::move(entry));
      }
    } catch (const std::exception& e) {
      throw ConfigError(path.string() + ": " + e.what());
    }
  }

  // QC partners must resolve too.
  for (const auto& [sub, list] : reg.bots_) {
    const auto resolve = reg.resolver(sub);
    for (const auto& b : list) {
      if (!b.qc) continue;
      for (const auto& [id, _] : b.qc->partners) resolve(id);
    }
  }

  for (const auto& path : json_files(root / "scenarios")) {
    try {
      const auto j = read_json(path);
      for (const auto& s : j.at("scenarios")) {
        ScenarioConfig cfg;
        cfg.id = s.at("id").get<std::string>();
        cfg.substrate = s.at("substrate").get<std::string>();
        cfg.c = s.at("c").get<std::vector<int>>();
        cfg.mode = parse_mode(s.at("mode").get<std::string>());
        cfg.description = s.value("description", std::string());
        const auto& spec = reg.substrate(cfg.substrate);
        const auto resolve = reg.resolver(cfg.substrate);
        std::vector<std::pair<PolicyHandlePtr, double>> bg;
        const auto background = s.value("background", nlohmann::json::array());
        for (const auto& b : background) {
          const double uniform = 1.0 / static_cast<double>(background.size());
          bg.emplace_back(resolve(b.at("bot").get<std::string>()), b.value("weight", uniform));
        }
        if (!bg.empty()) cfg.background = Population(std::move(bg));
        ScenarioEntry entry{build_scenario(std::move(cfg), spec), s.value("episodes", 10), std::nullopt};
        if (s.contains("best_known")) entry.best_known = s.at("best_known").get<double>();
        entry.seed = s.value("seed", std::uint64_t{0});
        if (entry.episodes < 1) throw ConfigError("episodes must be >= 1");
        const std::string id = entry.scenario.config.id;
        if (!reg.scenarios_.emplace(id, std::move(entry)).second) throw ConfigError("duplicate scenario '" + id + "'");
      }
    } catch (const std::exception& e) {
      throw ConfigError(path.string() + ": " + e.what());
    }
  }
  return reg;
}

std::vector<std::string> Registry::substrate_ids() const { return keys(substrates_); }
std::vector<std::string> Registry::scenario_ids() const { return keys(scenarios_); }

const SubstrateSpec& Registry::substrate(const std::string& id) const {
  const auto it = substrates_.find(id);
  if (it == substrates_.end()) throw ConfigError("unknown substrate '" + id + "'");
  return it->second;
}

const ScenarioEntry& Registry::scenario(const std::string& id) const {
  const auto it = scenarios_.find(id);
  if (it == scenarios_.end()) throw ConfigError("unknown scenario '" + id + "'");
  return it->second;
}

const std::vector<BotEntry>& Registry::bots(const std::string& substrate) const {
  static const std::vector<BotEntry> kNone;
  const auto it = bots_.find(substrate);
  return it == bots_.end() ? kNone : it->second;
}

const BotEntry& Registry::bot(const std::string& substrate, const std::string& id) const {
  for (const auto& b : bots(substrate)) {
    if (b.puppet.id == id) return b;
  }
  throw ConfigError("unknown bot '" + id + "' for substrate '" + substrate + "'");
}

PolicyResolver Registry::resolver(const std::string& substrate) const {
  return builtin_resolver([this, substrate](const std::string& id) { return bot(substrate, id).handle; });
}

Population Registry::population(const std::string& substrate, const std::string& spec) const {
  const auto resolve = resolver(substrate);
  std::vector<std::string> ids;
  std::size_t start = 0;
  while (true) {
    const auto pos = spec.find('+', start);
    ids.push_back(spec.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  std::vector<std::pair<PolicyHandlePtr, double>> entries;
  for (const auto& id : ids) {
    if (id.empty()) throw ConfigError("empty policy id in population '" + spec + "'");
    entries.emplace_back(resolve(id), 1.0 / static_cast<double>(ids.size()));
  }
  return Population(std::move(entries));
}

}  // namespace socialgrid
