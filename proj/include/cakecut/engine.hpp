#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cakecut/agent.hpp"
#include "cakecut/division.hpp"

namespace cakecut {

enum class ProtocolId {
  CutAndChoose,
  SelfridgeConway,
  LastDiminisher,
  LoneChooser,
  LoneDivider,
  CutYourOwnPiece,
  CutYourOwnPieceLeftRight,
  DivideAndConquer,
  MinimalEnvyDivideAndConquer,
  RecursiveDivideAndChoose,
  EnhancedFour,
  EnhancedGeneral,
  StrongFairFour,
  StrongFairGeneral,
};

struct ProtocolInfo {
  ProtocolId id;
  std::string_view name;
  int min_n;
  int max_n;  // 0 means unbounded
};

std::span<const ProtocolInfo> all_protocols();
const ProtocolInfo& protocol_info(ProtocolId id);
std::string_view protocol_name(ProtocolId id);
/// Accepts the canonical names plus a few aliases ("enhanced", "sc", "dc", "cyop").
std::optional<ProtocolId> parse_protocol(std::string_view name);
bool supports(ProtocolId id, int n);

enum class QueryKind { Eval = 0, Mark = 1, Choose = 2 };
std::string_view to_string(QueryKind k);

struct QueryRecord {
  int agent = 0;
  QueryKind kind = QueryKind::Eval;
  std::string step;
  std::string arguments;
  std::string answer;
};

/// One structured trace line.
struct StageRecord {
  std::string stage;
  int actor = -1;  // -1: the mediator itself
  std::string action;
  std::vector<std::pair<std::string, Rational>> values;
};

/// Boundaries of one outer-loop round of the general enhanced protocol.
struct OuterRound {
  int t = 0;
  int s = 0;
  Rational lambda;
  Rational rho;
  Rational rho_prime;
  int left_exit = -1;
  int right_exit = -1;
  int inner_iterations = 0;
  PieceSet subcake;  // C' at round start
};

struct QueryLedger {
  /// counts[agent][kind]
  std::vector<std::array<std::size_t, 3>> counts;

  std::size_t total() const;
  std::size_t total(QueryKind k) const;
  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;
};

struct ProtocolResult {
  ProtocolId protocol = ProtocolId::CutAndChoose;
  Division division;
  std::vector<QueryRecord> query_log;  // filled when RunOptions::record_queries
  QueryLedger tally;                   // always maintained
  std::size_t step_count = 0;
  std::vector<StageRecord> stage_trace;  // filled when RunOptions::trace
  std::vector<OuterRound> rounds;
  bool strong_fair_fallback = false;
  std::vector<std::string> fallback_stages;
  int recursion_depth = 0;
};

/// Counts per agent and query kind; read from the log when it was recorded.
QueryLedger query_ledger(const ProtocolResult& result);

struct RunOptions {
  bool trace = false;
  bool record_queries = true;
};

/// The only channel between a protocol and its players. Every query is
/// validated, answered by the agent, counted and (optionally) logged.
class Mediator {
 public:
  Mediator(ProtocolId protocol, std::span<const PlayerAgent> agents, RunOptions options);

  int player_count() const { return static_cast<int>(agents_.size()); }
  bool tracing() const { return options_.trace; }

  Rational mark(int agent, std::string_view step, const MarkRequest& request);
  /// Marks a point worth `share` of the agent's value of `domain`, measured from its left end.
  Rational mark_share_right(int agent, std::string_view step, const PieceSet& domain, const Rational& share);
  /// Mirror: measured leftward from `anchor`.
  Rational mark_share_left(int agent, std::string_view step, const PieceSet& domain, const Rational& anchor,
                           const Rational& share);
  Rational eval(int agent, std::string_view step, const PieceSet& piece);
  std::size_t choose(int agent, std::string_view step, std::span<const PieceSet> candidates);

  /// `agent` cuts `domain` into `parts` consecutive pieces of equal value to it.
  std::vector<PieceSet> cut_equal(int agent, std::string_view step, const PieceSet& domain, int parts);

  void give(int agent, const PieceSet& portion);
  PieceSet holding(int agent) const { return PieceSet(pending_.at(agent)); }

  void count_step(std::string_view label);
  void trace(StageRecord record);
  void trace(std::string stage, int actor, std::string action,
             std::vector<std::pair<std::string, Rational>> values = {});
  void note_round(OuterRound round) { result_.rounds.push_back(std::move(round)); }
  void note_fallback(std::string stage);
  void note_depth(int depth);

  /// Whether `agent` reports truthfully. Protocols use this only to attribute
  /// a broken invariant to a cheater instead of raising an internal error.
  bool truthful(int agent) const { return agents_[static_cast<std::size_t>(agent)].truthful(); }

  /// Runtime audit against true valuations: every truthful player in
  /// `players` values `subcake` at least `share` of the whole cake.
  void audit_share(std::span<const int> players, const PieceSet& subcake, const Rational& share) const;

  /// Verifies the partition and hands out the result.
  ProtocolResult finish();

 private:
  void record(int agent, QueryKind kind, std::string_view step, std::string arguments, std::string answer);
  void check_agent(int agent) const;

  std::span<const PlayerAgent> agents_;
  RunOptions options_;
  ProtocolResult result_;
  std::vector<std::vector<Interval>> pending_;  // portions, merged in finish()
};

ProtocolResult run_protocol(ProtocolId id, std::span<const PlayerAgent> agents, RunOptions options = {});
ProtocolResult run_protocol(ProtocolId id, std::span<const ValuationFunction> profile, RunOptions options = {});

/// Upper bound on step_count for the protocols whose steps are numbered.
std::optional<std::size_t> declared_step_bound(ProtocolId id, int n);

}  // namespace cakecut
