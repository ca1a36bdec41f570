#include <vector>

#include "cakecut/protocols.hpp"

namespace cakecut {

void run_last_diminisher(Mediator& m) {
  const int n = m.player_count();
  const Rational share(1, n);
  std::vector<int> remaining;
  for (int i = 0; i < n; ++i) remaining.push_back(i);
  PieceSet rest = PieceSet::whole();

  for (int round = 1; remaining.size() > 2; ++round) {
    const std::string step = "round " + std::to_string(round);
    const int cutter = remaining.front();
    // marks are measured against the whole cake, not the remainder
    Rational edge = m.mark(cutter, step, {rest.lo(), Direction::Rightward, share, PieceSet::whole(), rest});
    int holder = cutter;
    for (std::size_t k = 1; k < remaining.size(); ++k) {
      const int p = remaining[k];
      const PieceSet piece = rest.clip(rest.lo(), edge);
      if (share < m.eval(p, step, piece)) {
        edge = m.mark(p, step, {rest.lo(), Direction::Rightward, share, PieceSet::whole(), piece});
        holder = p;
        m.trace(step, p, "trims", {{"edge", edge}});
      }
    }
    m.give(holder, rest.clip(rest.lo(), edge));
    rest = rest.clip(edge, rest.hi());
    std::erase(remaining, holder);
  }
  cut_and_choose_on(m, remaining[0], remaining[1], rest, "final");
}

}  // namespace cakecut
