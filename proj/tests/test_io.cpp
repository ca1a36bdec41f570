#include <doctest.h>

#include <regex>
#include <string>

#include "cakecut/io.hpp"
#include "cakecut/random_profile.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

std::string problems_of(const std::string& text) {
  try {
    parse_profile(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return {};
}

void collect_numbers(const Json& j, int& count) {
  if (j.is_number_float()) ++count;
  if (j.is_structured()) {
    for (const auto& x : j) collect_numbers(x, count);
  }
}

}  // namespace

TEST_CASE("profile documents round trip") {
  const auto p = random_profile(4, 6, 3);
  const std::string text = profile_to_json(p).dump();
  const auto back = parse_profile(text);
  CHECK(back.valuations == p);
  CHECK(profile_to_json(back).dump() == text);
}

TEST_CASE("profile diagnostics") {
  CHECK(problems_of("{\"players\": [\n {\"name\": \"a\" \"segments\": []}]}").find("line 2") != std::string::npos);
  CHECK(problems_of("[]").find("players") != std::string::npos);

  const std::string bad = R"({"players": [
    {"name": "a", "segments": [{"start": "0/1", "end": "1/2", "density": "2/1"},
                               {"start": "1/2", "end": "1/1", "density": "0/1"}]},
    {"name": "b", "segments": [{"start": "0/1", "end": "1/3", "density": "1/1"},
                               {"start": "1/2", "end": "1/1", "density": "4/3"}]},
    {"name": "c", "segments": [{"start": "0/1", "end": "1/1"}]}
  ]})";
  const auto msg = problems_of(bad);
  CHECK(msg.find("players[0]") != std::string::npos);
  CHECK(msg.find("players[1]") != std::string::npos);
  CHECK(msg.find("players[2].segments[0].density") != std::string::npos);
}

TEST_CASE("division documents carry exact rationals only") {
  const auto u = uniform_profile(5);
  const auto r = run_protocol(ProtocolId::EnhancedGeneral, u, {true, true});
  const auto doc = division_document(r, Profile{{}, u});
  CHECK(doc["portions"][0]["intervals"][0] == "[0/1, 1/5)");
  CHECK(doc["portions"][1]["intervals"][0] == "[4/5, 1/1]");
  CHECK(doc["efr_count"] == 20);
  CHECK(doc.contains("stage_trace"));
  CHECK(doc.contains("query_ledger"));
  int floats = 0;
  collect_numbers(doc, floats);
  CHECK(floats == 0);
  const std::regex rational(R"(-?\d+/\d+)");
  for (const auto& portion : doc["portions"]) CHECK(std::regex_match(portion["own_value"].get<std::string>(), rational));
}

TEST_CASE("embedded witness profiles replay to the same run") {
  const auto search = search_min_efr(ProtocolId::LoneChooser, 4, 200, 2);
  const auto doc = search_document(search);
  const auto replay = parse_profile(doc["witness"].dump());
  CHECK(replay.valuations == search.witness);
  CHECK(fingerprint(run_protocol(ProtocolId::LoneChooser, replay.valuations)) ==
        fingerprint(run_protocol(ProtocolId::LoneChooser, search.witness)));
}
