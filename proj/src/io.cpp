#include "cakecut/io.hpp"

#include <fstream>
#include <sstream>

#include "cakecut/division.hpp"

namespace cakecut {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "\n  ") + p;
  return out;
}

Json intervals_json(const PieceSet& p) {
  Json a = Json::array();
  for (const auto& iv : p.intervals()) a.push_back(to_string(iv));
  return a;
}

Json ledger_json(const QueryLedger& l) {
  Json a = Json::array();
  for (std::size_t i = 0; i < l.counts.size(); ++i) {
    a.push_back({{"player", i + 1}, {"eval", l.counts[i][0]}, {"mark", l.counts[i][1]}, {"choose", l.counts[i][2]}});
  }
  return a;
}

Json witness_json(const Witness& w) {
  return {{"trial", w.trial}, {"efr_count", w.efr_count}, {"reason", w.reason}, {"profile", profile_to_json(w.profile)}};
}

// Parses one rational field, recording a problem on failure.
std::optional<Rational> field(const Json& obj, const std::string& key, const std::string& where,
                              std::vector<std::string>& problems) {
  if (!obj.contains(key)) {
    problems.push_back(where + "." + key + ": missing");
    return std::nullopt;
  }
  const Json& v = obj.at(key);
  if (!v.is_string()) {
    problems.push_back(where + "." + key + ": expected a \"p/q\" string, got " + std::string(v.type_name()));
    return std::nullopt;
  }
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception&) {
    problems.push_back(where + "." + key + ": '" + v.get<std::string>() + "' is not a rational");
    return std::nullopt;
  }
}

}  // namespace

DocumentError::DocumentError(std::vector<std::string> problems)
    : std::runtime_error("invalid profile document:\n  " + join(problems)), problems_(std::move(problems)) {}

Profile parse_profile(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // byte offset to line:column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (const auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw DocumentError({"line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg});
  }
  std::vector<std::string> problems;
  if (!doc.is_object() || !doc.contains("players") || !doc["players"].is_array()) {
    throw DocumentError({"players: expected an array of players at the top level"});
  }
  Profile out;
  const auto& players = doc["players"];
  if (players.empty()) problems.push_back("players: empty");
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string where = "players[" + std::to_string(i) + "]";
    const Json& p = players[i];
    if (!p.is_object()) {
      problems.push_back(where + ": expected an object");
      continue;
    }
    std::string name = "p" + std::to_string(i + 1);
    if (p.contains("name")) {
      if (p["name"].is_string()) {
        name = p["name"].get<std::string>();
      } else {
        problems.push_back(where + ".name: expected a string");
      }
    }
    if (!p.contains("segments") || !p["segments"].is_array() || p["segments"].empty()) {
      problems.push_back(where + ".segments: expected a non-empty array");
      continue;
    }
    std::vector<Rational> breaks, densities;
    bool ok = true;
    const auto& segs = p["segments"];
    for (std::size_t k = 0; k < segs.size(); ++k) {
      const std::string sw = where + ".segments[" + std::to_string(k) + "]";
      if (!segs[k].is_object()) {
        problems.push_back(sw + ": expected an object");
        ok = false;
        continue;
      }
      const auto start = field(segs[k], "start", sw, problems);
      const auto end = field(segs[k], "end", sw, problems);
      const auto density = field(segs[k], "density", sw, problems);
      if (!start || !end || !density) {
        ok = false;
        continue;
      }
      if (k == 0) {
        breaks.push_back(*start);
      } else if (breaks.back() != *start) {
        problems.push_back(sw + ".start: " + start->str() + " does not continue the previous end " +
                           breaks.back().str());
        ok = false;
      }
      breaks.push_back(*end);
      densities.push_back(*density);
    }
    if (!ok) continue;
    ValuationFunction v(breaks, densities);
    const auto report = validate_valuation(v);
    for (const auto& msg : report.violations) problems.push_back(where + ": " + msg);
    out.names.push_back(std::move(name));
    out.valuations.push_back(std::move(v));
  }
  if (!problems.empty()) throw DocumentError(std::move(problems));
  return out;
}

Profile read_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError({path + ": cannot open"});
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_profile(ss.str());
  } catch (const DocumentError& e) {
    std::vector<std::string> problems;
    for (const auto& p : e.problems()) problems.push_back(path + ": " + p);
    throw DocumentError(std::move(problems));
  }
}

Json profile_to_json(const Profile& profile) {
  Json players = Json::array();
  for (std::size_t i = 0; i < profile.valuations.size(); ++i) {
    const auto& v = profile.valuations[i];
    Json segs = Json::array();
    for (std::size_t k = 0; k < v.densities().size(); ++k) {
      segs.push_back({{"start", v.breakpoints()[k].str()},
                      {"end", v.breakpoints()[k + 1].str()},
                      {"density", v.densities()[k].str()}});
    }
    const std::string name = i < profile.names.size() ? profile.names[i] : "p" + std::to_string(i + 1);
    players.push_back({{"name", name}, {"segments", std::move(segs)}});
  }
  return {{"players", std::move(players)}};
}

Json profile_to_json(const std::vector<ValuationFunction>& valuations) { return profile_to_json(Profile{{}, valuations}); }

std::string to_string(const Division& d) {
  std::string out;
  for (std::size_t i = 0; i < d.n(); ++i) out += "p" + std::to_string(i + 1) + ": " + to_string(d.portions[i]) + "\n";
  return out;
}

Json division_document(const ProtocolResult& result, const Profile& profile) {
  const auto fair = fairness_report(result.division, profile.valuations);
  const std::size_t n = result.division.n();
  Json portions = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    portions.push_back({{"player", i + 1},
                        {"name", i < profile.names.size() ? profile.names[i] : "p" + std::to_string(i + 1)},
                        {"intervals", intervals_json(result.division.portions[i])},
                        {"own_value", fair.own_values[i].str()}});
  }
  Json envy = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(fair.envy(i, j));
    envy.push_back(std::move(row));
  }
  Json doc = {
      {"protocol", protocol_name(result.protocol)},
      {"n", n},
      {"portions", std::move(portions)},
      {"fairness",
       {{"proportional", fair.proportional},
        {"strong_fair", fair.strong_fair},
        {"envy_free", fair.envy_free},
        {"efr_count", fair.efr_count},
        {"envy", std::move(envy)}}},
      {"efr_count", fair.efr_count},
      {"step_count", result.step_count},
      {"query_ledger", ledger_json(query_ledger(result))},
  };
  if (result.strong_fair_fallback) doc["strong_fair_fallback"] = result.fallback_stages;
  if (!result.rounds.empty()) {
    Json rounds = Json::array();
    for (const auto& r : result.rounds) {
      rounds.push_back({{"t", r.t},
                        {"s", r.s},
                        {"lambda", r.lambda.str()},
                        {"rho", r.rho.str()},
                        {"rho_prime", r.rho_prime.str()},
                        {"inner_iterations", r.inner_iterations},
                        {"left_exit", r.left_exit + 1},
                        {"right_exit", r.right_exit + 1},
                        {"subcake", intervals_json(r.subcake)}});
    }
    doc["rounds"] = std::move(rounds);
  }
  if (!result.stage_trace.empty()) {
    Json trace = Json::array();
    for (const auto& s : result.stage_trace) {
      Json values = Json::object();
      for (const auto& [k, v] : s.values) values[k] = v.str();
      trace.push_back({{"stage", s.stage},
                       {"actor", s.actor < 0 ? Json("mediator") : Json("p" + std::to_string(s.actor + 1))},
                       {"action", s.action},
                       {"values", std::move(values)}});
    }
    doc["stage_trace"] = std::move(trace);
  }
  return doc;
}

Json verification_document(const VerificationReport& r) {
  Json violations = Json::array();
  for (const auto& w : r.violations) violations.push_back(witness_json(w));
  return {{"kind", "dgef_lower_bound"},
          {"protocol", protocol_name(r.protocol)},
          {"n", r.n},
          {"trials", r.trials},
          {"seed", r.seed},
          {"formula", r.formula},
          {"min_efr_observed", r.min_efr_observed},
          {"max_efr_observed", r.max_efr_observed},
          {"proportionality_failures", r.proportionality_failures},
          {"lower_bound_failures", r.lower_bound_failures},
          {"players_without_efr", r.players_without_efr},
          {"step_bound_failures", r.step_bound_failures},
          {"max_step_count", r.max_step_count},
          {"ok", r.ok()},
          {"violations", std::move(violations)}};
}

Json strategy_document(const StrategyReport& r) {
  Json policies = Json::array();
  for (const auto& p : r.per_policy) {
    policies.push_back({{"policy", to_string(p.kind)},
                        {"runs", p.runs},
                        {"aborted", p.aborted},
                        {"cheater_below_share", p.cheater_below_share},
                        {"cheater_above_share", p.cheater_above_share}});
  }
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_json(w));
  return {{"kind", "strategy_proofness"},
          {"protocol", protocol_name(r.protocol)},
          {"n", r.n},
          {"trials", r.trials},
          {"seed", r.seed},
          {"completed", r.completed},
          {"truthful_violations", r.truthful_violations},
          {"truthful_envy", r.truthful_envy},
          {"truthful_without_efr", r.truthful_without_efr},
          {"policies", std::move(policies)},
          {"ok", r.ok()},
          {"violations", std::move(witnesses)}};
}

Json search_document(const SearchResult& r) {
  return {{"kind", "min_efr_search"},
          {"protocol", protocol_name(r.protocol)},
          {"n", r.n},
          {"formula", r.formula},
          {"min_found", r.min_found},
          {"gap", static_cast<std::int64_t>(r.min_found) - r.formula},
          {"evaluations", r.evaluations},
          {"witness", profile_to_json(r.witness)}};
}

std::string fingerprint(const ProtocolResult& result) {
  Json doc;
  doc["protocol"] = protocol_name(result.protocol);
  Json portions = Json::array();
  for (const auto& p : result.division.portions) portions.push_back(intervals_json(p));
  doc["portions"] = std::move(portions);
  Json log = Json::array();
  for (const auto& q : result.query_log) log.push_back({q.agent, to_string(q.kind), q.step, q.arguments, q.answer});
  doc["log"] = std::move(log);
  doc["ledger"] = ledger_json(result.tally);
  doc["steps"] = result.step_count;
  Json trace = Json::array();
  for (const auto& s : result.stage_trace) {
    Json values = Json::array();
    for (const auto& [k, v] : s.values) values.push_back({k, v.str()});
    trace.push_back({s.stage, s.actor, s.action, std::move(values)});
  }
  doc["trace"] = std::move(trace);
  doc["fallback"] = result.fallback_stages;
  doc["depth"] = result.recursion_depth;
  return doc.dump();
}

}  // namespace cakecut
