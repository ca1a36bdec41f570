#include "cakecut/agent.hpp"

#include <stdexcept>

#include "cakecut/errors.hpp"

namespace cakecut {

CheaterPolicy CheaterPolicy::shift_toward_interior(Rational delta, std::vector<std::string> steps) {
  return {CheatKind::ShiftTowardInterior, std::move(delta), std::move(steps)};
}

CheaterPolicy CheaterPolicy::shift_toward_boundary(Rational delta, std::vector<std::string> steps) {
  return {CheatKind::ShiftTowardBoundary, std::move(delta), std::move(steps)};
}

CheaterPolicy CheaterPolicy::overclaim_eval(Rational factor, std::vector<std::string> steps) {
  return {CheatKind::OverclaimEval, std::move(factor), std::move(steps)};
}

bool CheaterPolicy::applies_to(std::string_view step) const {
  if (steps.empty()) return true;
  for (const auto& s : steps) {
    if (s == step) return true;
  }
  return false;
}

std::string to_string(const CheaterPolicy& p) {
  std::string out;
  switch (p.kind) {
    case CheatKind::ShiftTowardInterior: out = "interior:"; break;
    case CheatKind::ShiftTowardBoundary: out = "boundary:"; break;
    case CheatKind::OverclaimEval: out = "overclaim:"; break;
  }
  out += p.amount.str();
  if (!p.steps.empty()) {
    out += "@";
    for (std::size_t i = 0; i < p.steps.size(); ++i) out += (i ? "," : "") + p.steps[i];
  }
  return out;
}

CheaterPolicy parse_policy(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("policy must look like kind:amount, got '" + std::string(text) + "'");
  }
  const auto kind = text.substr(0, colon);
  auto rest = text.substr(colon + 1);
  std::vector<std::string> steps;
  if (const auto at = rest.find('@'); at != std::string_view::npos) {
    auto list = rest.substr(at + 1);
    rest = rest.substr(0, at);
    while (!list.empty()) {
      const auto comma = list.find(',');
      steps.emplace_back(list.substr(0, comma));
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
  }
  const Rational amount = Rational::parse(rest);
  if (kind == "interior" || kind == "boundary") {
    if (!(amount.sign() > 0 && amount < Rational(1))) {
      throw std::invalid_argument("shift amount must lie in (0,1), got " + amount.str());
    }
    return kind == "interior" ? CheaterPolicy::shift_toward_interior(amount, std::move(steps))
                              : CheaterPolicy::shift_toward_boundary(amount, std::move(steps));
  }
  if (kind == "overclaim") {
    if (amount.sign() <= 0) throw std::invalid_argument("overclaim factor must be positive");
    return CheaterPolicy::overclaim_eval(amount, std::move(steps));
  }
  throw std::invalid_argument("unknown policy kind '" + std::string(kind) + "'");
}

Rational PlayerAgent::truthful_mark(const MarkRequest& req) const {
  const Rational alpha = req.share * eval_pieces(valuation_, req.reference);
  return req.direction == Direction::Rightward ? mark_rightward(valuation_, req.anchor, alpha, req.domain)
                                               : mark_leftward(valuation_, req.anchor, alpha, req.domain);
}

Rational PlayerAgent::answer_mark(std::string_view step, const MarkRequest& req) const {
  if (!policy_ || !policy_->distorts_marks() || !policy_->applies_to(step)) return truthful_mark(req);

  const auto& d = req.domain;
  Rational honest;
  try {
    honest = truthful_mark(req);
  } catch (const InsufficientValue&) {
    honest = req.direction == Direction::Rightward ? d.hi() : d.lo();
  }
  const Rational anchor_len = d.length_before(req.anchor);
  const Rational len = d.length_before(honest);
  const Rational& delta = policy_->amount;
  const bool interior = policy_->kind == CheatKind::ShiftTowardInterior;
  Rational shifted;
  if (req.direction == Direction::Rightward) {
    shifted = interior ? len + delta * (d.width() - len) : len - delta * (len - anchor_len);
  } else {
    shifted = interior ? len - delta * len : len + delta * (anchor_len - len);
  }
  return d.point_at_length(shifted);
}

Rational PlayerAgent::answer_eval(std::string_view step, const PieceSet& piece) const {
  Rational v = eval_pieces(valuation_, piece);
  if (policy_ && policy_->distorts_evals() && policy_->applies_to(step)) v *= policy_->amount;
  return v;
}

std::size_t PlayerAgent::answer_choose(std::string_view, std::span<const PieceSet> candidates) const {
  if (candidates.empty()) throw std::invalid_argument("choose among zero candidates");
  std::size_t best = 0;
  Rational best_value = eval_pieces(valuation_, candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Rational v = eval_pieces(valuation_, candidates[i]);
    if (best_value < v) {
      best = i;
      best_value = std::move(v);
    }
  }
  return best;
}

std::vector<PlayerAgent> truthful_agents(std::span<const ValuationFunction> profile) {
  std::vector<PlayerAgent> agents;
  agents.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) agents.emplace_back(static_cast<int>(i), profile[i]);
  return agents;
}

}  // namespace cakecut
