#include "socialgrid/c_api.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <string>

#include "socialgrid/harness/session.hpp"

struct sg_registry {
  std::shared_ptr<const socialgrid::Registry> registry;
};

struct sg_session {
  std::unique_ptr<socialgrid::Session> session;
};

namespace {

thread_local std::string g_last_error;

sg_status fail(sg_status code, std::string message) {
  g_last_error = std::move(message);
  return code;
}

template <typename F>
sg_status guarded(F&& f) {
  try {
    return f();
  } catch (const socialgrid::ConfigError& e) {
    return fail(SG_ERR_CONFIG, e.what());
  } catch (const socialgrid::EngineError& e) {
    return fail(SG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SG_ERR_INTERNAL, "unknown error");
  }
}

sg_status open_session(const sg_session* s) {
  if (!s) return fail(SG_ERR_INVALID_ARGUMENT, "null session");
  if (!s->session) return fail(SG_ERR_CLOSED, "session is closed");
  return SG_OK;
}

sg_status copy_string(const std::string& s, char* buf, size_t capacity, size_t* len) {
  if (len) *len = s.size();
  if (!buf || capacity < s.size() + 1) return fail(SG_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(s.size() + 1) + " bytes");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return SG_OK;
}

int obs_height(const socialgrid::ObservationWindow& w) { return w.rows() * socialgrid::kSpritePixels; }
int obs_width(const socialgrid::ObservationWindow& w) { return w.cols() * socialgrid::kSpritePixels; }

}  // namespace

extern "C" {

int sg_abi_version(void) { return SG_ABI_VERSION; }

const char* sg_last_error(void) { return g_last_error.c_str(); }

sg_status sg_registry_open(const char* data_dir, sg_registry** out) {
  if (!out) return fail(SG_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    const auto dir = data_dir ? std::filesystem::path(data_dir) : socialgrid::Registry::default_data_dir();
    auto reg = std::make_shared<const socialgrid::Registry>(socialgrid::Registry::open(dir));
    *out = new sg_registry{std::move(reg)};
    return SG_OK;
  });
}

void sg_registry_free(sg_registry* registry) { delete registry; }

sg_status sg_registry_count(const sg_registry* registry, sg_list list, int32_t* out) {
  if (!registry || !out) return fail(SG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto ids = list == SG_SUBSTRATES ? registry->registry->substrate_ids() : registry->registry->scenario_ids();
    *out = static_cast<int32_t>(ids.size());
    return SG_OK;
  });
}

sg_status sg_registry_name(const sg_registry* registry, sg_list list, int32_t index, char* buf, size_t capacity,
                           size_t* len) {
  if (!registry) return fail(SG_ERR_INVALID_ARGUMENT, "null registry");
  return guarded([&] {
    const auto ids = list == SG_SUBSTRATES ? registry->registry->substrate_ids() : registry->registry->scenario_ids();
    if (index < 0 || index >= static_cast<int32_t>(ids.size())) return fail(SG_ERR_NOT_FOUND, "index out of range");
    return copy_string(ids[index], buf, capacity, len);
  });
}

sg_status sg_scenario_info_get(const sg_registry* registry, const char* scenario, sg_scenario_info* out) {
  if (!registry || !scenario || !out) return fail(SG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto ids = registry->registry->scenario_ids();
    if (std::find(ids.begin(), ids.end(), scenario) == ids.end()) {
      return fail(SG_ERR_NOT_FOUND, std::string("unknown scenario '") + scenario + "'");
    }
    const auto& sc = registry->registry->scenario(scenario).scenario;
    // Building a world is the only way to learn the action count.
    const socialgrid::EpisodeRunner probe(sc, 0, nullptr);
    out->num_players = sc.num_players();
    out->focal_count = sc.focal_count();
    out->episode_length = sc.substrate.episode_length;
    out->num_actions = probe.world().num_actions();
    out->obs_height = obs_height(sc.substrate.window);
    out->obs_width = obs_width(sc.substrate.window);
    out->obs_channels = 3;
    return SG_OK;
  });
}

sg_status sg_session_create(const sg_registry* registry, const char* scenario, uint64_t seed, sg_session** out) {
  if (!registry || !scenario || !out) return fail(SG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto ids = registry->registry->scenario_ids();
    if (std::find(ids.begin(), ids.end(), scenario) == ids.end()) {
      return fail(SG_ERR_NOT_FOUND, std::string("unknown scenario '") + scenario + "'");
    }
    *out = new sg_session{std::make_unique<socialgrid::Session>(registry->registry, scenario, seed)};
    return SG_OK;
  });
}

sg_status sg_session_reset(sg_session* session, uint64_t seed) {
  if (const auto st = open_session(session); st != SG_OK) return st;
  return guarded([&] {
    session->session->reset(seed);
    return SG_OK;
  });
}

sg_status sg_session_info_get(const sg_session* session, sg_session_info* out) {
  if (const auto st = open_session(session); st != SG_OK) return st;
  if (!out) return fail(SG_ERR_INVALID_ARGUMENT, "null output pointer");
  const auto& s = *session->session;
  out->focal_count = s.focal_count();
  out->num_actions = s.num_actions();
  out->step = s.step_count();
  out->episode_length = s.episode_length();
  out->done = s.done() ? 1 : 0;
  out->obs_height = obs_height(s.world().window());
  out->obs_width = obs_width(s.world().window());
  out->obs_channels = 3;
  return SG_OK;
}

sg_status sg_session_observe(const sg_session* session, int32_t seat, uint8_t* buf, size_t capacity) {
  if (const auto st = open_session(session); st != SG_OK) return st;
  return guarded([&] {
    if (seat < 0 || seat >= session->session->focal_count()) return fail(SG_ERR_INVALID_ARGUMENT, "focal seat out of range");
    const auto obs = session->session->observe(seat);
    if (!buf || capacity < obs.pixels.pixels.size()) {
      return fail(SG_ERR_BUFFER_TOO_SMALL, "observation needs " + std::to_string(obs.pixels.pixels.size()) + " bytes");
    }
    std::memcpy(buf, obs.pixels.pixels.data(), obs.pixels.pixels.size());
    return SG_OK;
  });
}

sg_status sg_session_step(sg_session* session, const int32_t* actions, int32_t count, double* rewards, int32_t* done) {
  if (const auto st = open_session(session); st != SG_OK) return st;
  auto& s = *session->session;
  if (s.done()) return fail(SG_ERR_EPISODE_DONE, "episode already finished");
  if (count != s.focal_count()) {
    return fail(SG_ERR_INVALID_ARGUMENT, "expected " + std::to_string(s.focal_count()) + " actions, got " + std::to_string(count));
  }
  if (count > 0 && !actions) return fail(SG_ERR_INVALID_ARGUMENT, "null actions");
  return guarded([&] {
    const std::vector<int> a(actions, actions + count);
    const auto out = s.step(a);
    if (rewards) std::copy(out.rewards.begin(), out.rewards.end(), rewards);
    if (done) *done = out.done ? 1 : 0;
    return SG_OK;
  });
}

sg_status sg_session_events_json(const sg_session* session, char* buf, size_t capacity, size_t* len) {
  if (const auto st = open_session(session); st != SG_OK) return st;
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : session->session->world().last_events()) {
      nlohmann::json j{{"name", e.name}, {"actor", e.actor}, {"target", e.target}, {"t", e.timestep}};
      if (e.position) j["position"] = {e.position->row, e.position->col};
      for (const auto& [k, v] : e.payload) j["payload"][k] = v;
      arr.push_back(std::move(j));
    }
    return copy_string(arr.dump(), buf, capacity, len);
  });
}

sg_status sg_session_returns(const sg_session* session, double* out, int32_t count) {
  if (const auto st = open_session(session); st != SG_OK) return st;
  const auto r = session->session->focal_returns();
  if (!out || count != static_cast<int32_t>(r.size())) return fail(SG_ERR_INVALID_ARGUMENT, "returns buffer must hold focal_count entries");
  std::copy(r.begin(), r.end(), out);
  return SG_OK;
}

sg_status sg_session_digests(const sg_session* session, uint64_t* event_digest, uint64_t* state_digest) {
  if (const auto st = open_session(session); st != SG_OK) return st;
  const auto r = session->session->result();
  if (event_digest) *event_digest = r.event_digest;
  if (state_digest) *state_digest = r.state_digest;
  return SG_OK;
}

sg_status sg_session_close(sg_session* session) {
  if (const auto st = open_session(session); st != SG_OK) return st;
  session->session.reset();
  return SG_OK;
}

void sg_session_free(sg_session* session) { delete session; }

}  // extern "C"
