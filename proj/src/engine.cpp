#include "cakecut/engine.hpp"

#include <algorithm>
#include <array>

#include "cakecut/errors.hpp"
#include "cakecut/protocols.hpp"

namespace cakecut {

namespace {

constexpr std::array<ProtocolInfo, 14> kProtocols{{
    {ProtocolId::CutAndChoose, "cut_and_choose", 2, 2},
    {ProtocolId::SelfridgeConway, "selfridge_conway", 3, 3},
    {ProtocolId::LastDiminisher, "last_diminisher", 3, 0},
    {ProtocolId::LoneChooser, "lone_chooser", 2, 0},
    {ProtocolId::LoneDivider, "lone_divider", 3, 0},
    {ProtocolId::CutYourOwnPiece, "cut_your_own_piece", 3, 0},
    {ProtocolId::CutYourOwnPieceLeftRight, "cut_your_own_piece_left_right", 3, 0},
    {ProtocolId::DivideAndConquer, "divide_and_conquer", 2, 0},
    {ProtocolId::MinimalEnvyDivideAndConquer, "minimal_envy_divide_and_conquer", 2, 0},
    {ProtocolId::RecursiveDivideAndChoose, "recursive_divide_and_choose", 2, 0},
    {ProtocolId::EnhancedFour, "enhanced_four", 4, 4},
    {ProtocolId::EnhancedGeneral, "enhanced_general", 3, 0},
    {ProtocolId::StrongFairFour, "strong_fair_four", 4, 4},
    {ProtocolId::StrongFairGeneral, "strong_fair_general", 4, 0},
}};

struct Alias {
  std::string_view name;
  ProtocolId id;
};

constexpr std::array<Alias, 12> kAliases{{
    {"cc", ProtocolId::CutAndChoose},
    {"sc", ProtocolId::SelfridgeConway},
    {"ld", ProtocolId::LastDiminisher},
    {"lc", ProtocolId::LoneChooser},
    {"ldiv", ProtocolId::LoneDivider},
    {"cyop", ProtocolId::CutYourOwnPiece},
    {"cyop_lr", ProtocolId::CutYourOwnPieceLeftRight},
    {"dc", ProtocolId::DivideAndConquer},
    {"me_dc", ProtocolId::MinimalEnvyDivideAndConquer},
    {"rdc", ProtocolId::RecursiveDivideAndChoose},
    {"enhanced", ProtocolId::EnhancedGeneral},
    {"strong_fair", ProtocolId::StrongFairGeneral},
}};

bool in_closure(const PieceSet& domain, const Rational& x) {
  for (const auto& iv : domain.intervals()) {
    if (!(x < iv.lo) && !(iv.hi < x)) return true;
  }
  return false;
}

}  // namespace

std::span<const ProtocolInfo> all_protocols() { return kProtocols; }

const ProtocolInfo& protocol_info(ProtocolId id) {
  for (const auto& p : kProtocols) {
    if (p.id == id) return p;
  }
  throw std::invalid_argument("unknown protocol id");
}

std::string_view protocol_name(ProtocolId id) { return protocol_info(id).name; }

std::optional<ProtocolId> parse_protocol(std::string_view name) {
  for (const auto& p : kProtocols) {
    if (p.name == name) return p.id;
  }
  for (const auto& a : kAliases) {
    if (a.name == name) return a.id;
  }
  return std::nullopt;
}

bool supports(ProtocolId id, int n) {
  const auto& info = protocol_info(id);
  return n >= info.min_n && (info.max_n == 0 || n <= info.max_n);
}

std::string_view to_string(QueryKind k) {
  switch (k) {
    case QueryKind::Eval: return "eval";
    case QueryKind::Mark: return "mark";
    case QueryKind::Choose: return "choose";
  }
  return "?";
}

std::size_t QueryLedger::total() const {
  std::size_t t = 0;
  for (const auto& row : counts) t += row[0] + row[1] + row[2];
  return t;
}

std::size_t QueryLedger::total(QueryKind k) const {
  std::size_t t = 0;
  for (const auto& row : counts) t += row[static_cast<int>(k)];
  return t;
}

QueryLedger query_ledger(const ProtocolResult& result) {
  if (result.query_log.empty()) return result.tally;
  QueryLedger l;
  l.counts.assign(result.division.n(), {0, 0, 0});
  for (const auto& q : result.query_log) {
    if (q.agent >= static_cast<int>(l.counts.size())) l.counts.resize(q.agent + 1, {0, 0, 0});
    ++l.counts[q.agent][static_cast<int>(q.kind)];
  }
  return l;
}

Mediator::Mediator(ProtocolId protocol, std::span<const PlayerAgent> agents, RunOptions options)
    : agents_(agents), options_(options) {
  result_.protocol = protocol;
  result_.division.portions.assign(agents.size(), PieceSet{});
  result_.tally.counts.assign(agents.size(), {0, 0, 0});
  pending_.resize(agents.size());
}

void Mediator::check_agent(int agent) const {
  if (agent < 0 || agent >= player_count()) throw InternalError("no agent with index " + std::to_string(agent));
}

void Mediator::record(int agent, QueryKind kind, std::string_view step, std::string arguments, std::string answer) {
  ++result_.tally.counts[agent][static_cast<int>(kind)];
  if (options_.record_queries) {
    result_.query_log.push_back({agent, kind, std::string(step), std::move(arguments), std::move(answer)});
  }
}

Rational Mediator::mark(int agent, std::string_view step, const MarkRequest& request) {
  check_agent(agent);
  Rational y;
  try {
    y = agents_[agent].answer_mark(step, request);
  } catch (const InsufficientValue& e) {
    throw ProtocolViolation(agent, std::string(step), e.what());
  } catch (const DomainError& e) {
    throw ProtocolViolation(agent, std::string(step), e.what());
  }
  const bool right = request.direction == Direction::Rightward;
  if (!in_closure(request.domain, y)) {
    throw ProtocolViolation(agent, std::string(step), "mark " + y.str() + " outside " + to_string(request.domain));
  }
  if (right ? y < request.anchor : request.anchor < y) {
    throw ProtocolViolation(agent, std::string(step),
                            "mark " + y.str() + " on the wrong side of anchor " + request.anchor.str());
  }
  if (options_.record_queries) {
    record(agent, QueryKind::Mark, step,
           "anchor=" + request.anchor.str() + (right ? " right" : " left") + " share=" + request.share.str() +
               " of " + to_string(request.reference) + " in " + to_string(request.domain),
           y.str());
  } else {
    record(agent, QueryKind::Mark, step, {}, {});
  }
  return y;
}

Rational Mediator::mark_share_right(int agent, std::string_view step, const PieceSet& domain,
                                    const Rational& share) {
  return mark(agent, step, {domain.lo(), Direction::Rightward, share, domain, domain});
}

Rational Mediator::mark_share_left(int agent, std::string_view step, const PieceSet& domain, const Rational& anchor,
                                   const Rational& share) {
  return mark(agent, step, {anchor, Direction::Leftward, share, domain, domain});
}

Rational Mediator::eval(int agent, std::string_view step, const PieceSet& piece) {
  check_agent(agent);
  Rational v = agents_[agent].answer_eval(step, piece);
  if (v.sign() < 0) throw ProtocolViolation(agent, std::string(step), "negative value " + v.str());
  if (options_.record_queries) {
    record(agent, QueryKind::Eval, step, to_string(piece), v.str());
  } else {
    record(agent, QueryKind::Eval, step, {}, {});
  }
  return v;
}

std::size_t Mediator::choose(int agent, std::string_view step, std::span<const PieceSet> candidates) {
  check_agent(agent);
  const std::size_t pick = agents_[agent].answer_choose(step, candidates);
  if (pick >= candidates.size()) {
    throw ProtocolViolation(agent, std::string(step), "chose candidate " + std::to_string(pick) + " of " +
                                                          std::to_string(candidates.size()));
  }
  if (options_.record_queries) {
    std::string args;
    for (std::size_t i = 0; i < candidates.size(); ++i) args += (i ? " " : "") + to_string(candidates[i]);
    record(agent, QueryKind::Choose, step, std::move(args), std::to_string(pick));
  } else {
    record(agent, QueryKind::Choose, step, {}, {});
  }
  return pick;
}

std::vector<PieceSet> Mediator::cut_equal(int agent, std::string_view step, const PieceSet& domain, int parts) {
  std::vector<PieceSet> pieces;
  pieces.reserve(parts);
  Rational prev = domain.lo();
  for (int j = 1; j < parts; ++j) {
    Rational cut = mark_share_right(agent, step, domain, Rational(j, parts));
    if (cut < prev) {
      throw ProtocolViolation(agent, std::string(step), "cut " + cut.str() + " left of previous cut " + prev.str());
    }
    pieces.push_back(domain.clip(prev, cut));
    prev = std::move(cut);
  }
  pieces.push_back(domain.clip(prev, domain.hi()));
  for (const auto& p : pieces) {
    if (p.empty()) throw ProtocolViolation(agent, std::string(step), "cut produced an empty piece");
  }
  if (tracing()) {
    std::vector<std::pair<std::string, Rational>> vals;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) vals.emplace_back("cut", pieces[i].hi());
    trace(std::string(step), agent, "cut " + std::to_string(parts) + " equal pieces of " + to_string(domain),
          std::move(vals));
  }
  return pieces;
}

void Mediator::give(int agent, const PieceSet& portion) {
  check_agent(agent);
  auto& mine = pending_[agent];
  mine.insert(mine.end(), portion.intervals().begin(), portion.intervals().end());
  if (tracing()) trace("assign", agent, "receives " + to_string(portion));
}

void Mediator::count_step(std::string_view) { ++result_.step_count; }

void Mediator::trace(StageRecord record) {
  if (options_.trace) result_.stage_trace.push_back(std::move(record));
}

void Mediator::trace(std::string stage, int actor, std::string action,
                     std::vector<std::pair<std::string, Rational>> values) {
  if (options_.trace) result_.stage_trace.push_back({std::move(stage), actor, std::move(action), std::move(values)});
}

void Mediator::note_fallback(std::string stage) {
  result_.strong_fair_fallback = true;
  result_.fallback_stages.push_back(std::move(stage));
}

void Mediator::note_depth(int depth) { result_.recursion_depth = std::max(result_.recursion_depth, depth); }

void Mediator::audit_share(std::span<const int> players, const PieceSet& subcake, const Rational& share) const {
  for (int p : players) {
    if (!agents_[p].truthful()) continue;
    const Rational v = eval_pieces(agents_[p].valuation(), subcake);
    if (v < share) {
      throw InternalError("player p" + std::to_string(p + 1) + " values the remaining cake at " + v.str() +
                          ", below " + share.str());
    }
  }
}

ProtocolResult Mediator::finish() {
  for (std::size_t i = 0; i < pending_.size(); ++i) result_.division.portions[i] = PieceSet(std::move(pending_[i]));
  pending_.clear();
  const auto report = verify_partition(result_.division);
  if (!report.ok()) {
    std::string msg = "division is not a partition:";
    for (const auto& g : report.gaps) msg += " gap " + to_string(g);
    for (const auto& o : report.overlaps) msg += " overlap " + to_string(o);
    for (auto i : report.empty_portions) msg += " empty portion for p" + std::to_string(i + 1);
    throw InternalError(msg);
  }
  return std::move(result_);
}

ProtocolResult run_protocol(ProtocolId id, std::span<const PlayerAgent> agents, RunOptions options) {
  const int n = static_cast<int>(agents.size());
  if (!supports(id, n)) {
    const auto& info = protocol_info(id);
    std::string range = std::to_string(info.min_n) + (info.max_n == 0 ? "+" : info.max_n == info.min_n ? "" : "-" + std::to_string(info.max_n));
    throw UnsupportedPlayerCount(std::string(info.name) + " needs n = " + range + " players, got " +
                                 std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (agents[i].id() != i) throw std::invalid_argument("agent ids must be 0..n-1 in order");
  }
  Mediator m(id, agents, options);
  switch (id) {
    case ProtocolId::CutAndChoose: run_cut_and_choose(m); break;
    case ProtocolId::SelfridgeConway: run_selfridge_conway(m); break;
    case ProtocolId::LastDiminisher: run_last_diminisher(m); break;
    case ProtocolId::LoneChooser: run_lone_chooser(m); break;
    case ProtocolId::LoneDivider: run_lone_divider(m); break;
    case ProtocolId::CutYourOwnPiece: run_cut_your_own_piece(m, CyopStrategy::None); break;
    case ProtocolId::CutYourOwnPieceLeftRight: run_cut_your_own_piece(m, CyopStrategy::LeftRight); break;
    case ProtocolId::DivideAndConquer: run_divide_and_conquer(m, false); break;
    case ProtocolId::MinimalEnvyDivideAndConquer: run_divide_and_conquer(m, true); break;
    case ProtocolId::RecursiveDivideAndChoose: run_recursive_divide_and_choose(m); break;
    case ProtocolId::EnhancedFour: run_enhanced_four(m, false); break;
    case ProtocolId::StrongFairFour: run_enhanced_four(m, true); break;
    case ProtocolId::EnhancedGeneral: run_enhanced_general(m, false); break;
    case ProtocolId::StrongFairGeneral: run_enhanced_general(m, true); break;
  }
  return m.finish();
}

ProtocolResult run_protocol(ProtocolId id, std::span<const ValuationFunction> profile, RunOptions options) {
  const auto agents = truthful_agents(profile);
  return run_protocol(id, agents, options);
}

std::optional<std::size_t> declared_step_bound(ProtocolId id, int n) {
  switch (id) {
    case ProtocolId::SelfridgeConway: return 9;
    case ProtocolId::EnhancedFour:
    case ProtocolId::StrongFairFour: return 12;
    case ProtocolId::EnhancedGeneral:
    case ProtocolId::StrongFairGeneral: {
      const std::size_t rounds = n > 4 ? static_cast<std::size_t>((n - 4 + 1) / 2) : 0;
      std::size_t inner = 0;
      for (std::size_t i = 1; i <= rounds; ++i) inner += static_cast<std::size_t>(n) - 2 * i;
      return 7 * rounds + 3 * inner + 13;
    }
    default: return std::nullopt;
  }
}

}  // namespace cakecut
