#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "cakecut/dgef.hpp"
#include "cakecut/errors.hpp"
#include "cakecut/io.hpp"
#include "cakecut/random_profile.hpp"
#include "cakecut/strategy.hpp"
#include "cakecut/verify.hpp"

namespace py = pybind11;
using namespace cakecut;

namespace {

ProtocolId protocol(const std::string& name) {
  if (auto id = parse_protocol(name)) return *id;
  throw std::invalid_argument("unknown protocol '" + name + "'");
}

std::string run(const std::string& name, const std::string& profile_json, bool trace) {
  const auto profile = parse_profile(profile_json);
  std::string out;
  {
    py::gil_scoped_release release;
    const auto result = run_protocol(protocol(name), profile.valuations, {trace, true});
    out = division_document(result, profile).dump();
  }
  return out;
}

std::string run_cheating(const std::string& name, const std::string& profile_json, int cheater,
                         const std::string& policy) {
  const auto profile = parse_profile(profile_json);
  const auto pol = parse_policy(policy);
  py::gil_scoped_release release;
  const auto r = run_with_cheater(protocol(name), profile.valuations, cheater - 1, pol);
  Json doc = division_document(r.result, profile);
  doc["cheater"] = {{"player", cheater}, {"policy", to_string(pol)}};
  return doc.dump();
}

std::string verify(const std::string& name, int n, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  VerifyOptions opts;
  opts.workers = workers;
  py::gil_scoped_release release;
  return verification_document(verify_dgef_lower_bound(protocol(name), n, trials, seed, opts)).dump();
}

std::string strategy(const std::string& name, int n, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  VerifyOptions opts;
  opts.workers = workers;
  const auto kinds = all_cheat_kinds();
  py::gil_scoped_release release;
  return strategy_document(check_strategy_proofness(protocol(name), n, trials, kinds, seed, opts)).dump();
}

std::vector<std::string> protocol_names() {
  std::vector<std::string> out;
  for (const auto& p : all_protocols()) out.emplace_back(p.name);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact cake-cutting protocols; documents are exchanged as JSON text";

  py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);
  py::register_exception<UnsupportedPlayerCount>(m, "UnsupportedPlayerCount", PyExc_ValueError);
  py::register_exception<ProtocolViolation>(m, "ProtocolViolation", PyExc_RuntimeError);

  m.def("protocols", &protocol_names);
  m.def("dgef", [](const std::string& name, std::int64_t n) { return dgef_formula(protocol(name), n); },
        py::arg("protocol"), py::arg("n"));
  m.def("dc_recurrence", &dc_recurrence, py::arg("n"));
  m.def("run", &run, py::arg("protocol"), py::arg("profile"), py::arg("trace") = false);
  m.def("run_cheating", &run_cheating, py::arg("protocol"), py::arg("profile"), py::arg("cheater"),
        py::arg("policy"));
  m.def("verify", &verify, py::arg("protocol"), py::arg("n"), py::arg("trials"), py::arg("seed") = 1,
        py::arg("workers") = 0);
  m.def("strategy", &strategy, py::arg("protocol"), py::arg("n"), py::arg("trials"), py::arg("seed") = 1,
        py::arg("workers") = 0);
  m.def("random_profile",
        [](int n, int segments, std::uint64_t seed) { return profile_to_json(random_profile(n, segments, seed)).dump(); },
        py::arg("n"), py::arg("segments"), py::arg("seed"));
  m.def("uniform_profile", [](int n) {
    return profile_to_json(std::vector<ValuationFunction>(static_cast<std::size_t>(n), ValuationFunction::uniform()))
        .dump();
  }, py::arg("n"));
}
