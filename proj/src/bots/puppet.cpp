#include "socialgrid/bots/puppet.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "socialgrid/bots/behavior.hpp"

namespace socialgrid {

namespace {

Who parse_who(const nlohmann::json& j, const char* key) {
  const auto s = j.value(key, std::string("any"));
  if (s == "any") return Who::kAny;
  if (s == "self") return Who::kSelf;
  if (s == "other") return Who::kOther;
  throw ConfigError(std::string(key) + " must be self, other or any (got '" + s + "')");
}

bool who_matches(Who w, int player, int self) {
  switch (w) {
    case Who::kAny: return true;
    case Who::kSelf: return player == self;
    case Who::kOther: return player >= 0 && player != self;
  }
  return false;
}

void check_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed, const char* what) {
  for (const auto& [key, _] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
      throw ConfigError(std::string("unknown field '") + key + "' in " + what);
    }
  }
}

struct Sighting {
  int step;
  int actor;
};

class TriggerState {
 public:
  explicit TriggerState(const Trigger* t) : t_(t) {}

  void observe(std::span<const Event> feed, int self) {
    if (!t_->filter) return;
    for (const auto& e : feed) {
      if (t_->filter->matches(e, self)) seen_.push_back({e.timestep, e.actor});
    }
  }

  bool holds(int step) {
    if (latched_) return true;
    bool ok = !t_->phase || t_->phase->contains(step);
    if (ok && t_->filter) {
      if (t_->within > 0) {
        while (!seen_.empty() && seen_.front().step < step - t_->within) seen_.pop_front();
      }
      std::set<int> actors;
      for (const auto& s : seen_) actors.insert(s.actor);
      ok = static_cast<int>(seen_.size()) >= t_->min_count &&
           static_cast<int>(actors.size()) >= t_->min_distinct_actors;
    }
    if (ok && t_->latch) latched_ = true;
    return ok;
  }

 private:
  const Trigger* t_;
  std::deque<Sighting> seen_;
  bool latched_ = false;
};

class Puppet final : public Policy {
 public:
  explicit Puppet(std::shared_ptr<const PuppetSpec> spec) : spec_(std::move(spec)) {}

  void reset(std::uint64_t seed) override {
    seed_ = seed;
    triggers_.clear();
    behaviors_.clear();
    for (const auto& r : spec_->rules) {
      triggers_.emplace_back(&r.when);
      behaviors_.push_back(make_behavior(r.behavior));
    }
    behaviors_.push_back(make_behavior(spec_->default_behavior));
  }

  int act(const StepContext& ctx) override {
    std::size_t pick = spec_->rules.size();
    // Every trigger sees every event, even when an earlier rule wins.
    for (auto& t : triggers_) t.observe(ctx.new_events, ctx.player);
    for (std::size_t i = 0; i < triggers_.size(); ++i) {
      if (triggers_[i].holds(ctx.step) && pick == spec_->rules.size()) pick = i;
    }
    const BehaviorContext bctx{ctx.world, ctx.player, ctx.step, seed_, ctx.new_events};
    return behaviors_[pick]->act(bctx);
  }

 private:
  std::shared_ptr<const PuppetSpec> spec_;
  std::uint64_t seed_ = 0;
  std::vector<TriggerState> triggers_;
  std::vector<std::unique_ptr<Behavior>> behaviors_;
};

}  // namespace

bool Phase::contains(int step) const {
  const int t = step % period;
  return t >= begin && t < end;
}

Phase Phase::from_json(const nlohmann::json& j) {
  check_keys(j, {"period", "begin", "end"}, "phase");
  Phase p{j.at("period").get<int>(), j.value("begin", 0), j.at("end").get<int>()};
  if (p.period < 1 || p.begin < 0 || p.end <= p.begin || p.end > p.period) {
    throw ConfigError("phase needs period >= 1 and 0 <= begin < end <= period");
  }
  return p;
}

bool EventFilter::matches(const Event& e, int self) const {
  if (e.name != event || !who_matches(actor, e.actor, self) || !who_matches(target, e.target, self)) return false;
  for (const auto& [k, v] : payload) {
    if (!e.has(k) || e.get(k) != v) return false;
  }
  return true;
}

EventFilter EventFilter::from_json(const nlohmann::json& j) {
  EventFilter f;
  f.event = j.at("event").get<std::string>();
  if (!events::is_known(f.event)) throw ConfigError("unknown event '" + f.event + "'");
  f.actor = parse_who(j, "actor");
  f.target = parse_who(j, "target");
  if (j.contains("payload")) {
    for (const auto& [k, v] : j.at("payload").items()) f.payload.emplace_back(k, v.get<double>());
  }
  return f;
}

Trigger Trigger::from_json(const nlohmann::json& j) {
  check_keys(j, {"event", "actor", "target", "payload", "within", "min_count", "min_distinct_actors", "latch", "phase"},
             "trigger");
  Trigger t;
  if (j.contains("event")) t.filter = EventFilter::from_json(j);
  t.within = j.value("within", 0);
  t.min_count = j.value("min_count", 1);
  t.min_distinct_actors = j.value("min_distinct_actors", 1);
  t.latch = j.value("latch", false);
  if (j.contains("phase")) t.phase = Phase::from_json(j.at("phase"));
  if (!t.filter && !t.phase) throw ConfigError("trigger needs an event or a phase");
  if (t.within < 0 || t.min_count < 1 || t.min_distinct_actors < 1) {
    throw ConfigError("trigger needs within >= 0, min_count >= 1, min_distinct_actors >= 1");
  }
  return t;
}

PuppetSpec PuppetSpec::from_json(const nlohmann::json& j) {
  PuppetSpec s;
  s.id = j.at("id").get<std::string>();
  try {
    for (const auto& r : j.value("rules", nlohmann::json::array())) {
      check_keys(r, {"when", "do"}, "rule");
      s.rules.push_back({Trigger::from_json(r.at("when")), r.at("do").get<std::string>()});
    }
    s.default_behavior = j.at("default").get<std::string>();
    // Instantiating once catches unknown names and bad arguments now.
    for (const auto& r : s.rules) make_behavior(r.behavior);
    make_behavior(s.default_behavior);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("bot '" + s.id + "': " + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError("bot '" + s.id + "': " + e.what());
  }
  return s;
}

PolicyHandlePtr compile_puppet(const PuppetSpec& spec) {
  auto shared = std::make_shared<const PuppetSpec>(spec);
  return make_handle(spec.id, [shared] { return std::make_unique<Puppet>(shared); });
}

}  // namespace socialgrid
