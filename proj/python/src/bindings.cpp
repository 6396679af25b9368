#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <vector>

#include "socialgrid/c_api.h"
#include "socialgrid/harness/session.hpp"

namespace py = pybind11;

namespace {

class Error : public std::runtime_error {
 public:
  Error(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

void check(sg_status st) {
  if (st != SG_OK) throw Error(st, sg_last_error());
}

std::string read_name(const sg_registry* reg, sg_list list, int32_t i) {
  size_t len = 0;
  sg_registry_name(reg, list, i, nullptr, 0, &len);
  std::string s(len + 1, '\0');
  check(sg_registry_name(reg, list, i, s.data(), s.size(), &len));
  s.resize(len);
  return s;
}

class Registry {
 public:
  explicit Registry(const std::optional<std::string>& data_dir) {
    sg_registry* raw = nullptr;
    check(sg_registry_open(data_dir ? data_dir->c_str() : nullptr, &raw));
    handle_.reset(raw);
  }

  std::vector<std::string> names(sg_list list) const {
    int32_t n = 0;
    check(sg_registry_count(handle_.get(), list, &n));
    std::vector<std::string> out;
    for (int32_t i = 0; i < n; ++i) out.push_back(read_name(handle_.get(), list, i));
    return out;
  }

  py::dict scenario_info(const std::string& id) const {
    sg_scenario_info info{};
    check(sg_scenario_info_get(handle_.get(), id.c_str(), &info));
    py::dict d;
    d["num_players"] = info.num_players;
    d["focal_count"] = info.focal_count;
    d["episode_length"] = info.episode_length;
    d["num_actions"] = info.num_actions;
    d["observation_shape"] = py::make_tuple(info.obs_height, info.obs_width, info.obs_channels);
    return d;
  }

  const sg_registry* get() const { return handle_.get(); }

 private:
  struct Free {
    void operator()(sg_registry* r) const { sg_registry_free(r); }
  };
  std::unique_ptr<sg_registry, Free> handle_;
};

class Session {
 public:
  Session(const Registry& reg, const std::string& scenario, std::uint64_t seed) {
    sg_session* raw = nullptr;
    check(sg_session_create(reg.get(), scenario.c_str(), seed, &raw));
    handle_.reset(raw);
    refresh();
  }

  py::list reset(std::uint64_t seed) {
    check(sg_session_reset(handle_.get(), seed));
    refresh();
    return observations();
  }

  py::tuple step(const std::vector<int32_t>& actions) {
    std::vector<double> rewards(info_.focal_count);
    int32_t done = 0;
    check(sg_session_step(handle_.get(), actions.data(), static_cast<int32_t>(actions.size()), rewards.data(), &done));
    refresh();
    return py::make_tuple(observations(), rewards, done != 0, events());
  }

  py::list observations() const {
    py::list out;
    for (int32_t seat = 0; seat < info_.focal_count; ++seat) out.append(observe(seat));
    return out;
  }

  py::array_t<std::uint8_t> observe(int32_t seat) const {
    py::array_t<std::uint8_t> arr({info_.obs_height, info_.obs_width, info_.obs_channels});
    check(sg_session_observe(handle_.get(), seat, arr.mutable_data(), static_cast<size_t>(arr.size())));
    return arr;
  }

  py::object events() const {
    size_t len = 0;
    sg_session_events_json(handle_.get(), nullptr, 0, &len);
    std::string s(len + 1, '\0');
    check(sg_session_events_json(handle_.get(), s.data(), s.size(), &len));
    s.resize(len);
    return py::module_::import("json").attr("loads")(s);
  }

  std::vector<double> returns() const {
    std::vector<double> out(info_.focal_count);
    check(sg_session_returns(handle_.get(), out.data(), info_.focal_count));
    return out;
  }

  std::pair<std::uint64_t, std::uint64_t> digests() const {
    std::uint64_t e = 0, s = 0;
    check(sg_session_digests(handle_.get(), &e, &s));
    return {e, s};
  }

  void close() { check(sg_session_close(handle_.get())); }

  const sg_session_info& info() const { return info_; }

 private:
  void refresh() { check(sg_session_info_get(handle_.get(), &info_)); }

  struct Free {
    void operator()(sg_session* s) const { sg_session_free(s); }
  };
  std::unique_ptr<sg_session, Free> handle_;
  sg_session_info info_{};
};

// Same episode through the C++ session directly, for boundary checks.
py::tuple native_run(const std::optional<std::string>& data_dir, const std::string& scenario, std::uint64_t seed,
                     const std::vector<std::vector<int>>& script) {
  const auto dir = data_dir ? std::filesystem::path(*data_dir) : socialgrid::Registry::default_data_dir();
  auto reg = std::make_shared<const socialgrid::Registry>(socialgrid::Registry::open(dir));
  socialgrid::Session s(reg, scenario, seed);
  for (const auto& a : script) {
    if (s.done()) break;
    s.step(a);
  }
  const auto r = s.result();
  return py::make_tuple(s.focal_returns(), r.event_digest, r.state_digest);
}

}  // namespace

PYBIND11_MODULE(_socialgrid, m) {
  m.doc() = "Bindings over the socialgrid C boundary";
  m.attr("ABI_VERSION") = SG_ABI_VERSION;
  m.def("abi_version", &sg_abi_version);

  static py::handle error_type = py::exception<Error>(m, "SocialGridError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
      exc.attr("code") = e.code();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.attr("OK") = static_cast<int>(SG_OK);
  m.attr("ERR_INVALID_ARGUMENT") = static_cast<int>(SG_ERR_INVALID_ARGUMENT);
  m.attr("ERR_NOT_FOUND") = static_cast<int>(SG_ERR_NOT_FOUND);
  m.attr("ERR_CLOSED") = static_cast<int>(SG_ERR_CLOSED);
  m.attr("ERR_EPISODE_DONE") = static_cast<int>(SG_ERR_EPISODE_DONE);
  m.attr("ERR_CONFIG") = static_cast<int>(SG_ERR_CONFIG);

  py::class_<Registry>(m, "Registry")
      .def(py::init<std::optional<std::string>>(), py::arg("data_dir") = py::none())
      .def("substrates", [](const Registry& r) { return r.names(SG_SUBSTRATES); })
      .def("scenarios", [](const Registry& r) { return r.names(SG_SCENARIOS); })
      .def("scenario_info", &Registry::scenario_info, py::arg("scenario"));

  py::class_<Session>(m, "Session")
      .def(py::init<const Registry&, const std::string&, std::uint64_t>(), py::arg("registry"), py::arg("scenario"),
           py::arg("seed"))
      .def("reset", &Session::reset, py::arg("seed"))
      .def("step", &Session::step, py::arg("actions"))
      .def("observations", &Session::observations)
      .def("observe", &Session::observe, py::arg("seat"))
      .def("events", &Session::events)
      .def("returns", &Session::returns)
      .def("digests", &Session::digests)
      .def("close", &Session::close)
      .def_property_readonly("focal_count", [](const Session& s) { return s.info().focal_count; })
      .def_property_readonly("num_actions", [](const Session& s) { return s.info().num_actions; })
      .def_property_readonly("step_count", [](const Session& s) { return s.info().step; })
      .def_property_readonly("episode_length", [](const Session& s) { return s.info().episode_length; })
      .def_property_readonly("done", [](const Session& s) { return s.info().done != 0; });

  m.def("native_run", &native_run, py::arg("data_dir"), py::arg("scenario"), py::arg("seed"), py::arg("script"));
}
