#include <algorithm>
#include <map>
#include <vector>

#include "cakecut/protocols.hpp"

namespace cakecut {

namespace {

// `players` is sorted and may repeat an id: repeats are clones sharing one valuation.
void subprocedure(Mediator& m, std::vector<int> players, const PieceSet& piece, int round) {
  m.note_depth(round);
  if (players.front() == players.back()) {
    m.give(players.front(), piece);
    return;
  }
  const std::string step = "round " + std::to_string(round);
  const int s = static_cast<int>(players.size());
  if (s == 2) {
    cut_and_choose_on(m, players[0], players[1], piece, step);
    return;
  }
  const int divider = players[0];
  const auto pieces = m.cut_equal(divider, step, piece, s);

  // each chooser drops its least valuable piece (ties: drop the rightmost)
  std::map<int, std::size_t> dropped;
  for (int i = 1; i < s; ++i) {
    const int c = players[i];
    if (dropped.contains(c)) continue;
    std::size_t worst = 0;
    Rational worst_value;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      Rational v = m.eval(c, step, pieces[p]);
      if (p == 0 || !(worst_value < v)) {
        worst = p;
        worst_value = std::move(v);
      }
    }
    dropped[c] = worst;
  }

  std::vector<std::vector<int>> markers(pieces.size());
  for (int i = 1; i < s; ++i) {
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      if (dropped[players[i]] != p) markers[p].push_back(players[i]);
    }
  }
  const std::vector<int> choosers(players.begin() + 1, players.end());
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    if (!markers[p].empty()) continue;
    // everyone agrees: the divider leaves with the unmarked piece
    m.give(divider, pieces[p]);
    m.trace(step, divider, "leaves with the unmarked piece");
    subprocedure(m, choosers, piece.minus(pieces[p]), round + 1);
    return;
  }
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    auto group = markers[p];
    group.resize(static_cast<std::size_t>(s - 1), divider);
    std::sort(group.begin(), group.end());
    subprocedure(m, std::move(group), pieces[p], round + 1);
  }
}

}  // namespace

void run_recursive_divide_and_choose(Mediator& m) {
  std::vector<int> players;
  for (int i = 0; i < m.player_count(); ++i) players.push_back(i);
  subprocedure(m, std::move(players), PieceSet::whole(), 1);
}

}  // namespace cakecut
