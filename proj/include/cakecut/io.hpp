#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cakecut/dgef.hpp"
#include "cakecut/engine.hpp"
#include "cakecut/strategy.hpp"
#include "cakecut/verify.hpp"

namespace cakecut {

using Json = nlohmann::ordered_json;

/// A profile document failed to parse or validate; what() lists every problem.
class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct Profile {
  std::vector<std::string> names;
  std::vector<ValuationFunction> valuations;
};

/// {"players": [{"name": "...", "segments": [{"start": "0/1", "end": "1/2", "density": "3/2"}, ...]}, ...]}
Profile parse_profile(const std::string& text);
Profile read_profile_file(const std::string& path);
Json profile_to_json(const Profile& profile);
Json profile_to_json(const std::vector<ValuationFunction>& valuations);

std::string to_string(const Division& d);
Json division_document(const ProtocolResult& result, const Profile& profile);
Json verification_document(const VerificationReport& report);
Json strategy_document(const StrategyReport& report);
Json search_document(const SearchResult& result);

/// Everything a run produced, serialized; equal strings mean identical runs.
std::string fingerprint(const ProtocolResult& result);

}  // namespace cakecut
