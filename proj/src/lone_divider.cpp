#include <algorithm>
#include <vector>

#include "cakecut/errors.hpp"
#include "cakecut/matching.hpp"
#include "cakecut/protocols.hpp"

namespace cakecut {

namespace {

void lone_divider_on(Mediator& m, std::vector<int> players, const PieceSet& cake, int round) {
  const int s = static_cast<int>(players.size());
  if (s == 1) {
    m.give(players[0], cake);
    return;
  }
  const std::string step = "round " + std::to_string(round);
  const int divider = players.front();
  const std::vector<int> choosers(players.begin() + 1, players.end());
  const auto pieces = m.cut_equal(divider, step, cake, s);

  // acceptable: worth at least 1/s of what the chooser thinks the current cake is worth
  BipartiteGraph accept(choosers.size(), std::vector<bool>(pieces.size(), false));
  for (std::size_t c = 0; c < choosers.size(); ++c) {
    std::vector<Rational> values;
    Rational total;
    for (const auto& p : pieces) {
      values.push_back(m.eval(choosers[c], step, p));
      total += values.back();
    }
    bool any = false;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      accept[c][p] = !(values[p] * Rational(s) < total);
      any = any || accept[c][p];
    }
    if (!any) {
      if (m.truthful(choosers[c])) throw InternalError("chooser accepts no piece");
      throw ProtocolViolation(choosers[c], step, "accepts none of the divider's pieces");
    }
  }

  const auto match = lexicographic_max_matching(accept);
  const auto reach = alternating_reach(accept, match);
  std::vector<bool> used(pieces.size(), false);
  for (std::size_t c = 0; c < choosers.size(); ++c) {
    if (!reach.left[c]) {
      m.give(choosers[c], pieces[match[c]]);
      used[match[c]] = true;
    } else if (match[c] >= 0) {
      used[match[c]] = true;  // stays in play with the unsettled choosers
    }
  }
  std::size_t leftover = pieces.size();
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    if (!used[p] && !reach.right[p]) {
      leftover = p;
      break;
    }
  }
  if (leftover == pieces.size()) throw InternalError("no piece left for the divider");
  m.give(divider, pieces[leftover]);

  std::vector<int> next;
  for (std::size_t c = 0; c < choosers.size(); ++c) {
    if (reach.left[c]) next.push_back(choosers[c]);
  }
  if (next.empty()) return;
  std::vector<Interval> rest;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const bool settled = p == leftover || (used[p] && !reach.right[p]);
    if (!settled) rest.insert(rest.end(), pieces[p].intervals().begin(), pieces[p].intervals().end());
  }
  m.trace(step, -1, std::to_string(next.size()) + " choosers continue on the reassembled rest");
  lone_divider_on(m, std::move(next), PieceSet(std::move(rest)), round + 1);
}

}  // namespace

void run_lone_divider(Mediator& m) {
  std::vector<int> players;
  for (int i = 0; i < m.player_count(); ++i) players.push_back(i);
  lone_divider_on(m, std::move(players), PieceSet::whole(), 1);
}

}  // namespace cakecut
