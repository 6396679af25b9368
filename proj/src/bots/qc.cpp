#include "socialgrid/bots/qc.hpp"

#include <cmath>
#include <sstream>

#include "socialgrid/protocol/scenario.hpp"

namespace socialgrid {

namespace {

QCCriterion::Kind parse_kind(const std::string& s) {
  using K = QCCriterion::Kind;
  if (s == "event_rate") return K::kEventRate;
  if (s == "payload_share" || s == "pickup_share") return K::kPayloadShare;
  if (s == "conditional") return K::kConditional;
  if (s == "never") return K::kNever;
  if (s == "phase_share") return K::kPhaseShare;
  if (s == "all") return K::kAll;
  throw ConfigError("unknown QC criterion '" + s + "'");
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

struct Tally {
  double num = 0.0;
  double den = 0.0;
};

// Counts for one episode; num/den meaning depends on the kind.
Tally tally(const QCCriterion& c, const std::vector<Event>& log, const std::vector<int>& candidates) {
  using K = QCCriterion::Kind;
  Tally t;
  for (int self : candidates) {
    switch (c.kind) {
      case K::kEventRate:
      case K::kNever:
        for (const auto& e : log) t.num += c.filter.matches(e, self) ? 1 : 0;
        t.den += 1;
        break;
      case K::kPayloadShare:
        for (const auto& e : log) {
          if (!c.filter.matches(e, self)) continue;
          t.den += 1;
          if (e.has(c.key) && e.get(c.key) == c.value) t.num += 1;
        }
        break;
      case K::kPhaseShare:
        for (const auto& e : log) {
          if (!c.filter.matches(e, self)) continue;
          t.den += 1;
          if (c.phase->contains(e.timestep)) t.num += 1;
        }
        break;
      case K::kConditional: {
        std::vector<int> responses;
        for (const auto& e : log) {
          if (c.response->matches(e, self)) responses.push_back(e.timestep);
        }
        for (const auto& e : log) {
          if (!c.filter.matches(e, self)) continue;
          t.den += 1;
          const int lo = c.before ? e.timestep - c.within : e.timestep;
          const int hi = c.before ? e.timestep : e.timestep + c.within;
          const auto it = std::lower_bound(responses.begin(), responses.end(), lo);
          if (it != responses.end() && *it <= hi) t.num += 1;
        }
        break;
      }
      case K::kAll: break;
    }
  }
  return t;
}

struct Verdict {
  double statistic = 0.0;
  std::string threshold;
  bool passed = false;
  std::string reason;
};

Verdict judge(const QCCriterion& c, const std::vector<Tally>& per_episode) {
  using K = QCCriterion::Kind;
  Tally sum;
  for (const auto& t : per_episode) {
    sum.num += t.num;
    sum.den += t.den;
  }
  Verdict v;
  const std::string what = c.filter.event;
  switch (c.kind) {
    case K::kEventRate:
      v.statistic = sum.den > 0 ? sum.num / sum.den : 0.0;
      v.threshold = ">= " + fmt(c.min) + (c.max ? " and <= " + fmt(*c.max) : "");
      v.passed = v.statistic >= c.min && (!c.max || v.statistic <= *c.max);
      v.reason = what + " per candidate per episode = " + fmt(v.statistic);
      break;
    case K::kNever:
      v.statistic = sum.num;
      v.threshold = "== 0";
      v.passed = sum.num == 0;
      v.reason = what + " seen " + fmt(sum.num) + " times";
      break;
    case K::kPayloadShare:
    case K::kPhaseShare:
      v.threshold = ">= " + fmt(c.min) + (c.max ? " and <= " + fmt(*c.max) : "");
      if (sum.den == 0) {
        v.reason = "no " + what + " events to judge";
        break;
      }
      v.statistic = sum.num / sum.den;
      v.passed = v.statistic >= c.min && (!c.max || v.statistic <= *c.max);
      v.reason = fmt(sum.num) + " of " + fmt(sum.den) + " " + what + " events qualify";
      break;
    case K::kConditional:
      v.threshold = ">= " + fmt(c.min);
      if (sum.den == 0) {
        v.statistic = 1.0;
        v.passed = true;
        v.reason = "no " + what + " events; accepted vacuously";
        break;
      }
      v.statistic = sum.num / sum.den;
      v.passed = v.statistic >= c.min;
      v.reason = fmt(sum.num) + " of " + fmt(sum.den) + " " + what + " events with " + c.response->event + " within " +
                 std::to_string(c.within) + " steps " + (c.before ? "before" : "after");
      break;
    case K::kAll: break;
  }
  return v;
}

}  // namespace

QCCriterion QCCriterion::from_json(const nlohmann::json& j) {
  QCCriterion c;
  c.kind = parse_kind(j.at("type").get<std::string>());
  if (c.kind == Kind::kAll) {
    for (const auto& sub : j.at("criteria")) c.all.push_back(from_json(sub));
    if (c.all.empty()) throw ConfigError("QC criterion 'all' needs at least one criterion");
    return c;
  }
  c.filter = EventFilter::from_json(j);
  c.min = j.value("min", 0.0);
  if (j.contains("max")) c.max = j.at("max").get<double>();
  switch (c.kind) {
    case Kind::kPayloadShare:
      c.key = j.at("key").get<std::string>();
      c.value = j.at("value").get<double>();
      break;
    case Kind::kPhaseShare: c.phase = Phase::from_json(j.at("phase")); break;
    case Kind::kConditional: {
      c.response = EventFilter::from_json(j.at("then"));
      c.within = j.at("within").get<int>();
      const auto direction = j.value("direction", std::string("after"));
      if (direction != "after" && direction != "before") throw ConfigError("conditional direction must be after or before");
      c.before = direction == "before";
      if (c.within < 0) throw ConfigError("conditional QC needs within >= 0");
      break;
    }
    default: break;
  }
  return c;
}

QCConfig QCConfig::from_json(const nlohmann::json& j) {
  QCConfig q;
  q.episodes = j.value("episodes", 10);
  if (q.episodes < 10 || q.episodes > 30) throw ConfigError("QC episodes must be between 10 and 30");
  q.focal = j.value("focal", 1);
  if (j.contains("episode_length")) q.episode_length = j.at("episode_length").get<int>();
  for (const auto& p : j.at("partners")) {
    if (p.is_string()) q.partners.emplace_back(p.get<std::string>(), 0.0);
    else q.partners.emplace_back(p.at("bot").get<std::string>(), p.at("weight").get<double>());
  }
  if (q.partners.empty()) throw ConfigError("QC needs at least one partner");
  // Bare ids share the weight evenly.
  if (std::all_of(q.partners.begin(), q.partners.end(), [](const auto& p) { return p.second == 0.0; })) {
    for (auto& p : q.partners) p.second = 1.0 / static_cast<double>(q.partners.size());
  }
  q.criterion = QCCriterion::from_json(j.at("criterion"));
  return q;
}

nlohmann::json QCReport::to_json() const {
  return {{"candidate", candidate}, {"substrate", substrate}, {"episodes", episodes}, {"per_episode", per_episode},
          {"statistic", statistic}, {"threshold", threshold},  {"verdict", passed ? "pass" : "fail"},
          {"reason", reason}};
}

PolicyResolver builtin_resolver(PolicyResolver bots) {
  return [bots = std::move(bots)](const std::string& id) -> PolicyHandlePtr {
    if (id == "random") return random_policy();
    if (id == "noop") return noop_policy();
    if (!bots) throw ConfigError("unknown policy '" + id + "'");
    return bots(id);
  };
}

QCReport qc_run(const SubstrateSpec& substrate, const PuppetSpec& candidate, const QCConfig& config,
                const PolicyResolver& resolve, std::uint64_t seed) {
  SubstrateSpec spec = substrate;
  if (config.episode_length) spec.episode_length = *config.episode_length;
  const int n = spec.players;
  if (config.focal < 1 || config.focal > n) throw ConfigError("QC focal seats must be in [1, players]");

  ScenarioConfig sc;
  sc.id = "qc:" + candidate.id;
  sc.substrate = spec.id;
  sc.c.assign(n, 0);
  std::fill_n(sc.c.begin(), config.focal, 1);
  const int zeros = n - config.focal;
  sc.mode = zeros == 0               ? ScenarioMode::kUniversalization
            : config.focal > zeros   ? ScenarioMode::kResident
            : config.focal == zeros  ? ScenarioMode::kHalfAndHalf
                                     : ScenarioMode::kVisitor;
  std::vector<std::pair<PolicyHandlePtr, double>> partners;
  for (const auto& [id, w] : config.partners) partners.emplace_back(resolve(id), w);
  sc.background = Population(std::move(partners));
  const Scenario scenario = build_scenario(std::move(sc), std::move(spec));
  const Population focal = Population::single(compile_puppet(candidate));

  QCReport report;
  report.candidate = candidate.id;
  report.substrate = substrate.id;
  report.episodes = config.episodes;

  std::vector<QCCriterion> leaves;
  if (config.criterion.kind == QCCriterion::Kind::kAll) leaves = config.criterion.all;
  else leaves.push_back(config.criterion);
  std::vector<std::vector<Tally>> tallies(leaves.size());

  for (int e = 0; e < config.episodes; ++e) {
    const std::uint64_t s = hash_combine(hash_combine(seed, fnv1a64(candidate.id)), static_cast<std::uint64_t>(e));
    const auto result = run_episode(scenario, focal, s, true);
    if (result.aborted) {
      report.reason = "episode " + std::to_string(e) + " aborted: " + result.abort_reason;
      report.passed = false;
      return report;
    }
    std::vector<int> cands;
    for (int p = 0; p < n; ++p) {
      if (result.c[p] == 1) cands.push_back(p);
    }
    for (std::size_t i = 0; i < leaves.size(); ++i) tallies[i].push_back(tally(leaves[i], result.events, cands));
    report.per_episode.push_back(tallies[0].back().num);
  }

  report.passed = true;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto v = judge(leaves[i], tallies[i]);
    if (i == 0) {
      report.statistic = v.statistic;
      report.threshold = v.threshold;
    }
    if (!report.reason.empty()) report.reason += "; ";
    report.reason += v.reason + (v.passed ? "" : " (needs " + v.threshold + ")");
    report.passed = report.passed && v.passed;
  }
  return report;
}

}  // namespace socialgrid
