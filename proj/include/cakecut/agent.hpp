#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cakecut/piece_set.hpp"
#include "cakecut/rational.hpp"
#include "cakecut/valuation.hpp"

namespace cakecut {

enum class Direction { Rightward, Leftward };

/// "Mark the point, measured from `anchor` through `domain` in `direction`,
/// where the stretch is worth `share` of what `reference` is worth to you."
struct MarkRequest {
  Rational anchor;
  Direction direction = Direction::Rightward;
  Rational share;
  PieceSet reference;
  PieceSet domain;
};

enum class CheatKind {
  ShiftTowardInterior,  // mark moves away from its anchor: claims a bigger piece
  ShiftTowardBoundary,  // mark moves toward its anchor: claims a smaller piece
  OverclaimEval,        // eval answers multiplied by a factor
};

/// A parametric distortion of one agent's answers. Shifts move a mark by
/// `amount` (a fraction in (0,1)) of the remaining domain length in the
/// shift direction, so every distorted mark stays inside the queried domain.
struct CheaterPolicy {
  CheatKind kind = CheatKind::ShiftTowardInterior;
  Rational amount;
  /// Step labels the distortion applies to; empty means every step.
  std::vector<std::string> steps;

  static CheaterPolicy shift_toward_interior(Rational delta, std::vector<std::string> steps = {});
  static CheaterPolicy shift_toward_boundary(Rational delta, std::vector<std::string> steps = {});
  static CheaterPolicy overclaim_eval(Rational factor, std::vector<std::string> steps = {});

  bool applies_to(std::string_view step) const;
  bool distorts_marks() const { return kind != CheatKind::OverclaimEval; }
  bool distorts_evals() const { return kind == CheatKind::OverclaimEval; }
};

std::string to_string(const CheaterPolicy& p);
/// Parses "interior:1/4", "boundary:1/10", "overclaim:3/2"; optional "@1,4.2" step filter.
CheaterPolicy parse_policy(std::string_view text);

/// A player: its true valuation plus, for a cheater, the distortion it applies.
class PlayerAgent {
 public:
  PlayerAgent(int id, ValuationFunction valuation) : id_(id), valuation_(std::move(valuation)) {}
  PlayerAgent(int id, ValuationFunction valuation, CheaterPolicy policy)
      : id_(id), valuation_(std::move(valuation)), policy_(std::move(policy)) {}

  int id() const { return id_; }
  bool truthful() const { return !policy_.has_value(); }
  const std::optional<CheaterPolicy>& policy() const { return policy_; }
  /// The true valuation; used for analysis, never handed to a protocol.
  const ValuationFunction& valuation() const { return valuation_; }

  Rational answer_mark(std::string_view step, const MarkRequest& req) const;
  Rational answer_eval(std::string_view step, const PieceSet& piece) const;
  /// Index of the most valuable candidate; ties go to the lowest index.
  std::size_t answer_choose(std::string_view step, std::span<const PieceSet> candidates) const;

 private:
  Rational truthful_mark(const MarkRequest& req) const;

  int id_;
  ValuationFunction valuation_;
  std::optional<CheaterPolicy> policy_;
};

std::vector<PlayerAgent> truthful_agents(std::span<const ValuationFunction> profile);

}  // namespace cakecut
