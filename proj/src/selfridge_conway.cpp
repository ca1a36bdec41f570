#include <algorithm>
#include <vector>

#include "cakecut/errors.hpp"
#include "cakecut/protocols.hpp"

namespace cakecut {

void selfridge_conway_on(Mediator& m, std::array<int, 3> players, const PieceSet& domain, const std::string& prefix) {
  const auto [cutter, trimmer, chooser] = players;
  const auto label = [&](int step) { return prefix + std::to_string(step); };

  m.count_step(label(4));
  std::vector<PieceSet> pieces = m.cut_equal(cutter, label(4), domain, 3);

  m.count_step(label(5));
  std::vector<Rational> values;
  for (const auto& p : pieces) values.push_back(m.eval(trimmer, label(5), p));
  const auto top = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
  const bool strict = std::count(values.begin(), values.end(), values[top]) == 1;
  int trimmed = -1;
  PieceSet trimmings;
  if (strict) {
    // the runner-up is what the top piece gets trimmed down to
    std::size_t second = top == 0 ? 1 : 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != top && values[second] < values[i]) second = i;
    }
    const PieceSet& big = pieces[top];
    const Rational cut = m.mark(trimmer, label(5), {big.lo(), Direction::Rightward, Rational(1), pieces[second], big});
    trimmings = big.clip(cut, big.hi());
    pieces[top] = big.clip(big.lo(), cut);
    if (pieces[top].empty()) throw ProtocolViolation(trimmer, label(5), "trimmed the piece away entirely");
    trimmed = static_cast<int>(top);
    m.trace(label(5), trimmer, "trims piece " + std::to_string(top + 1), {{"cut", cut}});
  } else {
    m.trace(label(5), trimmer, "tie for the best piece, no trimming");
  }

  std::vector<std::size_t> left{0, 1, 2};
  const auto take = [&](std::size_t slot) {
    const std::size_t idx = left[slot];
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(slot));
    return idx;
  };
  const auto candidates = [&] {
    std::vector<PieceSet> c;
    for (auto i : left) c.push_back(pieces[i]);
    return c;
  };

  m.count_step(label(6));
  const std::size_t chooser_piece = take(m.choose(chooser, label(6), candidates()));
  m.give(chooser, pieces[chooser_piece]);

  m.count_step(label(7));
  std::size_t trimmer_piece;
  if (const auto it = std::find(left.begin(), left.end(), static_cast<std::size_t>(trimmed)); it != left.end()) {
    trimmer_piece = take(static_cast<std::size_t>(it - left.begin()));
  } else {
    trimmer_piece = take(m.choose(trimmer, label(7), candidates()));
  }
  m.give(trimmer, pieces[trimmer_piece]);

  m.count_step(label(8));
  m.give(cutter, pieces[take(0)]);

  if (trimmed < 0 || trimmings.empty()) return;

  const int holder = static_cast<int>(chooser_piece) == trimmed ? chooser : trimmer;
  const int splitter = holder == chooser ? trimmer : chooser;
  m.count_step(label(9));
  std::vector<PieceSet> shares = m.cut_equal(splitter, label(9), trimmings, 3);

  m.count_step(label(10));
  const std::size_t a = m.choose(holder, label(10), shares);
  m.give(holder, shares[a]);
  shares.erase(shares.begin() + static_cast<std::ptrdiff_t>(a));

  m.count_step(label(11));
  const std::size_t b = m.choose(cutter, label(11), shares);
  m.give(cutter, shares[b]);
  shares.erase(shares.begin() + static_cast<std::ptrdiff_t>(b));

  m.count_step(label(12));
  m.give(splitter, shares.front());
}

void run_selfridge_conway(Mediator& m) { selfridge_conway_on(m, {0, 1, 2}, PieceSet::whole()); }

}  // namespace cakecut
