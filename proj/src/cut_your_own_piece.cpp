#include <vector>

#include "cakecut/errors.hpp"
#include "cakecut/protocols.hpp"

namespace cakecut {

namespace {

// Left-right rule on [lo, hi]: the smallest piece starting at lo goes to its
// marker, the smallest piece ending at hi to its marker (another player),
// and the middle is handled again with everyone else.
void left_right(Mediator& m, std::vector<int> players, PieceSet middle, const Rational& share, int round) {
  while (true) {
    if (players.size() == 1) {
      m.give(players[0], middle);
      return;
    }
    const std::string step = "round " + std::to_string(round++);
    std::vector<Rational> lefts, rights;
    for (int p : players) {
      lefts.push_back(m.mark(p, step, {middle.lo(), Direction::Rightward, share, PieceSet::whole(), middle}));
    }
    std::size_t a = 0;
    for (std::size_t i = 1; i < players.size(); ++i) {
      if (lefts[i] < lefts[a]) a = i;
    }
    const PieceSet left_piece = middle.clip(middle.lo(), lefts[a]);
    if (players.size() == 2) {
      m.give(players[a], left_piece);
      m.give(players[1 - a], middle.clip(lefts[a], middle.hi()));
      return;
    }
    for (int p : players) {
      rights.push_back(m.mark(p, step, {middle.hi(), Direction::Leftward, share, PieceSet::whole(), middle}));
    }
    std::size_t b = a == 0 ? 1 : 0;
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (i != a && rights[b] < rights[i]) b = i;
    }
    m.give(players[a], left_piece);
    m.give(players[b], middle.clip(rights[b], middle.hi()));
    m.trace(step, -1, "left-right exits", {{"left", lefts[a]}, {"right", rights[b]}});
    middle = middle.clip(lefts[a], rights[b]);
    std::vector<int> next;
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (i != a && i != b) next.push_back(players[i]);
    }
    players = std::move(next);
  }
}

}  // namespace

void run_cut_your_own_piece(Mediator& m, CyopStrategy strategy) {
  const int n = m.player_count();
  const PieceSet cake = PieceSet::whole();
  std::vector<std::vector<Rational>> marks(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j < n; ++j) marks[i].push_back(m.mark_share_right(i, "marks", cake, Rational(j, n)));
    marks[i].push_back(Rational(1));
  }

  if (strategy == CyopStrategy::LeftRight) {
    // the first round reuses the initial marks at both ends
    std::vector<int> players;
    for (int i = 0; i < n; ++i) players.push_back(i);
    std::size_t a = 0;
    for (int i = 1; i < n; ++i) {
      if (marks[i][0] < marks[a][0]) a = i;
    }
    std::size_t b = a == 0 ? 1 : 0;
    for (int i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(i) != a && marks[b][n - 2] < marks[i][n - 2]) b = i;
    }
    m.give(static_cast<int>(a), cake.clip(Rational(0), marks[a][0]));
    m.give(static_cast<int>(b), cake.clip(marks[b][n - 2], Rational(1)));
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(i) != a && static_cast<std::size_t>(i) != b) rest.push_back(i);
    }
    left_right(m, std::move(rest), cake.clip(marks[a][0], marks[b][n - 2]), Rational(1, n), 2);
    return;
  }

  // no strategy: n-1 cuts at existing marks, greedily from the left; each
  // cut ends the earliest own piece lying wholly right of the current edge
  std::vector<bool> done(n, false);
  Rational edge(0);
  for (int round = 1; round < n; ++round) {
    int best = -1;
    Rational best_end;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      Rational start(0);
      for (const auto& end : marks[i]) {
        if (!(start < edge)) {
          if (best < 0 || end < best_end) {
            best = i;
            best_end = end;
          }
          break;
        }
        start = end;
      }
    }
    if (best < 0 || !(edge < best_end)) throw InternalError("no own piece left right of " + edge.str());
    m.give(best, cake.clip(edge, best_end));
    done[best] = true;
    edge = best_end;
  }
  for (int i = 0; i < n; ++i) {
    if (!done[i]) m.give(i, cake.clip(edge, Rational(1)));
  }
}

}  // namespace cakecut
