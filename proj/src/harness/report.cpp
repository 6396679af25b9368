#include "socialgrid/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace socialgrid {

namespace {

struct Accumulator {
  std::string substrate;
  std::string mode;
  std::vector<double> focal;
  std::vector<double> background;
  std::vector<double> equality;
  int equality_missing = 0;
  int aborted = 0;
};

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double stderr_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

nlohmann::json opt(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

std::string csv_opt(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream os;
  os.precision(17);
  os << *v;
  return os.str();
}

std::string csv_num(double v) { return csv_opt(v); }

}  // namespace

Report build_report(const std::vector<nlohmann::json>& records, const Registry* registry) {
  std::map<std::pair<std::string, std::string>, Accumulator> acc;  // (population, scenario)
  std::map<std::string, std::map<int, std::map<std::string, double>>> by_seed;  // scenario -> episode -> population
  std::set<std::string> populations;
  for (const auto& r : records) {
    const auto pop = r.at("population").get<std::string>();
    const auto sid = r.at("scenario").get<std::string>();
    populations.insert(pop);
    auto& a = acc[{pop, sid}];
    a.substrate = r.at("substrate").get<std::string>();
    a.mode = r.at("mode").get<std::string>();
    if (r.at("aborted").get<bool>()) {
      ++a.aborted;
      continue;
    }
    const double f = r.at("focal_per_capita").get<double>();
    a.focal.push_back(f);
    by_seed[sid][r.at("episode").get<int>()][pop] = f;
    if (a.mode != "resident" && !r.at("background_per_capita").is_null()) {
      a.background.push_back(r.at("background_per_capita").get<double>());
      if (r.at("background_equality").is_null()) ++a.equality_missing;
      else a.equality.push_back(r.at("background_equality").get<double>());
    }
  }

  // Anchors per scenario.
  std::map<std::string, ScenarioAnchors> anchors;
  std::map<std::string, std::vector<std::pair<std::string, double>>> means;
  for (const auto& [key, a] : acc) {
    if (!a.focal.empty()) means[key.second].emplace_back(key.first, mean(a.focal));
  }
  for (const auto& [sid, list] : means) {
    ScenarioAnchors an;
    const auto [lo_it, hi_it] = std::minmax_element(list.begin(), list.end(),
                                                    [](const auto& x, const auto& y) { return x.second < y.second; });
    an.lo = lo_it->second;
    an.lo_source = "worst";
    for (const auto& [pop, m] : list) {
      if (pop == "random") {
        an.lo = m;
        an.lo_source = "random";
      }
    }
    an.hi = hi_it->second;
    an.hi_source = "best";
    if (registry) {
      const auto& entry = registry->scenario(sid);
      if (entry.best_known && *entry.best_known > an.hi) {
        an.hi = *entry.best_known;
        an.hi_source = "best_known";
      }
    }
    an.hi = std::max(an.hi, an.lo);
    anchors[sid] = an;
  }

  Report rep;
  std::map<std::pair<std::string, std::string>, std::vector<double>> per_substrate;
  for (const auto& [key, a] : acc) {
    ReportRow row;
    row.population = key.first;
    row.scenario = key.second;
    row.substrate = a.substrate;
    row.mode = a.mode;
    row.episodes = static_cast<int>(a.focal.size());
    row.aborted = a.aborted;
    row.focal_per_capita = mean(a.focal);
    row.focal_stderr = stderr_of(a.focal);
    if (!a.background.empty()) row.background_per_capita = mean(a.background);
    if (!a.equality.empty()) row.equality = mean(a.equality);
    row.equality_missing = a.equality_missing;
    if (!a.focal.empty()) {
      row.anchors = anchors.at(key.second);
      row.score = normalize_score(row.focal_per_capita, row.anchors.lo, row.anchors.hi);
      per_substrate[{key.first, a.substrate}].push_back(row.score.value);
    }
    rep.rows.push_back(std::move(row));
  }
  for (const auto& [key, scores] : per_substrate) {
    rep.substrates.push_back({key.first, key.second, mean(scores), static_cast<int>(scores.size())});
  }

  rep.matches = MatchTable(std::vector<std::string>(populations.begin(), populations.end()));
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < rep.matches.names.size(); ++i) index[rep.matches.names[i]] = i;
  for (const auto& [sid, episodes] : by_seed) {
    for (const auto& [e, scores] : episodes) {
      for (auto a = scores.begin(); a != scores.end(); ++a) {
        for (auto b = std::next(a); b != scores.end(); ++b) {
          rep.matches.add(index[a->first], index[b->first], a->second, b->second);
        }
      }
    }
  }
  if (rep.matches.size() > 0) rep.elo = fit_elo(rep.matches);
  return rep;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"population", r.population},
                         {"scenario", r.scenario},
                         {"substrate", r.substrate},
                         {"mode", r.mode},
                         {"episodes", r.episodes},
                         {"aborted", r.aborted},
                         {"focal_per_capita", r.focal_per_capita},
                         {"focal_stderr", r.focal_stderr},
                         {"background_per_capita", opt(r.background_per_capita)},
                         {"equality", opt(r.equality)},
                         {"equality_missing", r.equality_missing},
                         {"anchor_lo", r.anchors.lo},
                         {"anchor_lo_source", r.anchors.lo_source},
                         {"anchor_hi", r.anchors.hi},
                         {"anchor_hi_source", r.anchors.hi_source},
                         {"normalized_score", r.score.value},
                         {"score_overflow", r.score.overflow},
                         {"score_degenerate", r.score.degenerate}});
  }
  j["substrates"] = nlohmann::json::array();
  for (const auto& s : substrates) {
    j["substrates"].push_back({{"population", s.population}, {"substrate", s.substrate}, {"score", s.score}, {"scenarios", s.scenarios}});
  }
  nlohmann::json elo_j = nlohmann::json::object();
  for (std::size_t i = 0; i < matches.size() && i < elo.elo.size(); ++i) {
    elo_j[matches.names[i]] = {{"elo", elo.elo[i]}, {"normalized", elo.normalized[i]}, {"component", elo.component[i]}};
  }
  j["elo"] = elo_j;
  j["elo_warnings"] = elo.warnings;
  return j;
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "population,scenario,substrate,mode,episodes,aborted,focal_per_capita,focal_stderr,background_per_capita,"
        "equality,equality_missing,anchor_lo,anchor_hi,normalized_score,score_overflow,score_degenerate\n";
  for (const auto& r : rows) {
    os << r.population << ',' << r.scenario << ',' << r.substrate << ',' << r.mode << ',' << r.episodes << ','
       << r.aborted << ',' << csv_num(r.focal_per_capita) << ',' << csv_num(r.focal_stderr) << ','
       << csv_opt(r.background_per_capita) << ',' << csv_opt(r.equality) << ',' << r.equality_missing << ','
       << csv_num(r.anchors.lo) << ',' << csv_num(r.anchors.hi) << ',' << csv_num(r.score.value) << ','
       << (r.score.overflow ? 1 : 0) << ',' << (r.score.degenerate ? 1 : 0) << '\n';
  }
  return os.str();
}

void write_report(const Report& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "report.json") << report.to_json().dump(2) << '\n';
  std::ofstream(dir / "report.csv") << report.to_csv();
}

}  // namespace socialgrid
