#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cakecut/dgef.hpp"
#include "cakecut/errors.hpp"
#include "cakecut/io.hpp"
#include "cakecut/random_profile.hpp"
#include "cakecut/strategy.hpp"
#include "cakecut/verify.hpp"

namespace {

using namespace cakecut;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing");
      return {n, n};
    }
    const int a = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("trailing");
    const std::string rest = text.substr(dots + 2);
    const int b = std::stoi(rest, &used);
    if (used != rest.size() || b < a) throw std::invalid_argument("order");
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("--n expects N or A..B, got '" + text + "'");
  }
}

ProtocolId protocol_or_throw(const std::string& name) {
  if (auto id = parse_protocol(name)) return *id;
  std::string known;
  for (const auto& p : all_protocols()) known += (known.empty() ? "" : ", ") + std::string(p.name);
  throw UsageError("unknown protocol '" + name + "' (known: " + known + ")");
}

void emit(const Json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write '" + out + "'");
  f << text;
}

std::string approx(const Rational& r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << r.approx();
  return r.str() + " (approx " + os.str() + ")";
}

std::vector<CheatKind> parse_kinds(const std::string& text) {
  if (text.empty() || text == "all") return all_cheat_kinds();
  if (text == "shift") return shift_cheat_kinds();
  std::vector<CheatKind> kinds;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item == "interior") kinds.push_back(CheatKind::ShiftTowardInterior);
    else if (item == "boundary") kinds.push_back(CheatKind::ShiftTowardBoundary);
    else if (item == "overclaim") kinds.push_back(CheatKind::OverclaimEval);
    else throw UsageError("unknown policy kind '" + item + "' (interior, boundary, overclaim, shift, all)");
  }
  return kinds;
}

struct RunArgs {
  std::string protocol;
  std::string profile;
  bool trace = false;
  std::string out;
  int cheat = 0;
  std::string policy;
};

int cmd_run(const RunArgs& a) {
  const ProtocolId id = protocol_or_throw(a.protocol);
  const Profile profile = read_profile_file(a.profile);
  const int n = static_cast<int>(profile.valuations.size());
  const RunOptions options{a.trace, true};

  if ((a.cheat != 0) != !a.policy.empty()) throw UsageError("--cheat and --policy go together");

  ProtocolResult result;
  FairnessReport fair;
  int cheater = -1;
  if (a.cheat != 0) {
    if (a.cheat < 1 || a.cheat > n) throw UsageError("--cheat expects a player number in 1.." + std::to_string(n));
    cheater = a.cheat - 1;
    CheaterPolicy policy;
    try {
      policy = parse_policy(a.policy);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    try {
      auto run = run_with_cheater(id, profile.valuations, cheater, policy, options);
      result = std::move(run.result);
      fair = std::move(run.fairness);
    } catch (const ProtocolViolation& e) {
      std::cerr << "run aborted: " << e.what() << "\n";
      return kViolation;
    }
  } else {
    result = run_protocol(id, profile.valuations, options);
    fair = fairness_report(result.division, profile.valuations);
  }

  Json doc = division_document(result, profile);
  if (cheater >= 0) doc["cheater"] = {{"player", cheater + 1}, {"policy", a.policy}};
  emit(doc, a.out);

  std::cerr << protocol_name(id) << ", n = " << n << "\n" << to_string(result.division);
  for (int i = 0; i < n; ++i) std::cerr << "  v" << i + 1 << " = " << approx(fair.own_values[i]) << "\n";
  std::cerr << "efr_count " << fair.efr_count << ", steps " << result.step_count << "\n";

  const Rational share(1, n);
  bool violated = false;
  for (int i = 0; i < n; ++i) {
    if (i != cheater && fair.own_values[i] < share) {
      std::cerr << "violation: p" << i + 1 << " below 1/" << n << "\n";
      violated = true;
    }
  }
  if (cheater < 0) {
    const auto bound = dgef_formula(id, n);
    if (static_cast<std::int64_t>(fair.efr_count) < bound) {
      std::cerr << "violation: efr_count below guaranteed " << bound << "\n";
      violated = true;
    }
  }
  return violated ? kViolation : kOk;
}

int cmd_table(const std::string& range_text, bool json) {
  const Range r = parse_range(range_text);
  const auto cols = table_protocols();
  for (const auto id : cols) {
    if (!supports(id, r.lo)) throw UsageError("table starts at n = 3");
  }
  if (json) {
    Json rows = Json::array();
    for (int n = r.lo; n <= r.hi; ++n) {
      Json row = {{"n", n}};
      for (const auto id : cols) row[std::string(protocol_name(id))] = dgef_formula(id, n);
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump(2) << "\n";
    return kOk;
  }
  std::cout << std::setw(4) << "n";
  for (const auto id : cols) std::cout << "  " << protocol_name(id);
  std::cout << "\n";
  for (int n = r.lo; n <= r.hi; ++n) {
    std::cout << std::setw(4) << n;
    for (const auto id : cols) {
      std::cout << "  " << std::setw(static_cast<int>(protocol_name(id).size())) << dgef_formula(id, n);
    }
    std::cout << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::string protocol;
  std::string n;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  bool cheat = false;
  std::string policy;
  std::string out;
  unsigned workers = 0;
};

int cmd_verify(const VerifyArgs& a) {
  const ProtocolId id = protocol_or_throw(a.protocol);
  const Range r = parse_range(a.n);
  if (a.trials == 0) throw UsageError("--trials must be positive");
  for (int n = r.lo; n <= r.hi; ++n) {
    if (!supports(id, n)) {
      throw UsageError(std::string(protocol_name(id)) + " does not support n = " + std::to_string(n));
    }
  }
  VerifyOptions opts;
  opts.workers = a.workers;

  Json reports = Json::array();
  bool ok = true;
  for (int n = r.lo; n <= r.hi; ++n) {
    if (a.cheat) {
      const auto kinds = parse_kinds(a.policy);
      StrategyReport rep;
      try {
        rep = check_strategy_proofness(id, n, a.trials, kinds, a.seed, opts);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      ok = ok && rep.ok();
      std::cerr << protocol_name(id) << " n=" << n << " cheat: completed " << rep.completed << "/" << rep.trials
                << ", truthful violations " << rep.truthful_violations << "\n";
      for (const auto& p : rep.per_policy) {
        std::cerr << "  " << to_string(p.kind) << ": runs " << p.runs << ", aborted " << p.aborted
                  << ", cheater below share " << p.cheater_below_share << "\n";
      }
      reports.push_back(strategy_document(rep));
    } else {
      const auto rep = verify_dgef_lower_bound(id, n, a.trials, a.seed, opts);
      ok = ok && rep.ok();
      std::cerr << protocol_name(id) << " n=" << n << ": min efr " << rep.min_efr_observed << " (guaranteed "
                << rep.formula << "), proportionality failures " << rep.proportionality_failures
                << ", lower-bound failures " << rep.lower_bound_failures << "\n";
      reports.push_back(verification_document(rep));
    }
  }
  emit(Json{{"ok", ok}, {"reports", std::move(reports)}}, a.out);
  return ok ? kOk : kViolation;
}

int cmd_search(const std::string& protocol, int n, std::uint64_t budget, std::uint64_t seed, const std::string& out) {
  const ProtocolId id = protocol_or_throw(protocol);
  if (!supports(id, n)) throw UsageError(std::string(protocol_name(id)) + " does not support n = " + std::to_string(n));
  if (budget == 0) throw UsageError("--budget must be positive");
  const auto res = search_min_efr(id, n, budget, seed);
  std::cerr << protocol_name(id) << " n=" << n << ": smallest efr found " << res.min_found << " (guaranteed "
            << res.formula << ")\n";
  emit(search_document(res), out);
  return static_cast<std::int64_t>(res.min_found) < res.formula ? kViolation : kOk;
}

int cmd_profile(int n, bool uniform, int segments, std::uint64_t seed, const std::string& out) {
  if (n < 1) throw UsageError("--n must be positive");
  if (segments < 1) throw UsageError("--segments must be positive");
  std::vector<ValuationFunction> vs =
      uniform ? std::vector<ValuationFunction>(static_cast<std::size_t>(n), ValuationFunction::uniform())
              : random_profile(n, segments, seed);
  emit(profile_to_json(vs), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cake-cutting protocols and envy-freeness analysis"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "run one protocol on a profile document");
  run_cmd->add_option("--protocol", run.protocol, "protocol name")->required();
  run_cmd->add_option("--profile", run.profile, "profile document (JSON)")->required();
  run_cmd->add_flag("--trace", run.trace, "include the stage trace");
  run_cmd->add_option("--out", run.out, "output path (default stdout)");
  run_cmd->add_option("--cheat", run.cheat, "player number that deviates");
  run_cmd->add_option("--policy", run.policy, "deviation, e.g. interior:1/4 or overclaim:2@5");

  std::string table_n = "3..12";
  bool table_json = false;
  auto* table_cmd = app.add_subcommand("table", "print guaranteed envy-free relation counts");
  table_cmd->add_option("--n", table_n, "N or A..B");
  table_cmd->add_flag("--json", table_json, "machine-readable rows");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "randomized campaign against the guarantees");
  verify_cmd->add_option("--protocol", verify.protocol, "protocol name")->required();
  verify_cmd->add_option("--n", verify.n, "N or A..B")->required();
  verify_cmd->add_option("--trials", verify.trials, "profiles per n")->required();
  verify_cmd->add_option("--seed", verify.seed, "campaign seed");
  verify_cmd->add_flag("--cheat", verify.cheat, "single-cheater campaign");
  verify_cmd->add_option("--policy", verify.policy, "cheat kinds: interior,boundary,overclaim | shift | all");
  verify_cmd->add_option("--out", verify.out, "report path (default stdout)");
  verify_cmd->add_option("--workers", verify.workers, "worker threads (0: all cores)");

  std::string search_protocol;
  int search_n = 0;
  std::uint64_t search_budget = 2000;
  std::uint64_t search_seed = 1;
  std::string search_out;
  auto* search_cmd = app.add_subcommand("search", "hunt for profiles with few envy-free relations");
  search_cmd->add_option("--protocol", search_protocol, "protocol name")->required();
  search_cmd->add_option("--n", search_n, "player count")->required();
  search_cmd->add_option("--budget", search_budget, "protocol runs");
  search_cmd->add_option("--seed", search_seed, "seed");
  search_cmd->add_option("--out", search_out, "output path (default stdout)");

  int profile_n = 0;
  bool profile_uniform = false;
  int profile_segments = 4;
  std::uint64_t profile_seed = 1;
  std::string profile_out;
  auto* profile_cmd = app.add_subcommand("profile", "write a profile document");
  profile_cmd->add_option("--n", profile_n, "player count")->required();
  profile_cmd->add_flag("--uniform", profile_uniform, "every player uniform");
  profile_cmd->add_option("--segments", profile_segments, "density segments per player");
  profile_cmd->add_option("--seed", profile_seed, "seed");
  profile_cmd->add_option("--out", profile_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*table_cmd) return cmd_table(table_n, table_json);
    if (*verify_cmd) return cmd_verify(verify);
    if (*search_cmd) return cmd_search(search_protocol, search_n, search_budget, search_seed, search_out);
    if (*profile_cmd) return cmd_profile(profile_n, profile_uniform, profile_segments, profile_seed, profile_out);
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedPlayerCount& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
