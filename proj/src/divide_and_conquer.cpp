#include <algorithm>
#include <vector>

#include "cakecut/errors.hpp"
#include "cakecut/protocols.hpp"

namespace cakecut {

namespace {

struct Cut {
  Rational at;
  int player;
};

void sort_cuts(std::vector<Cut>& cuts) {
  std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) {
    if (a.at != b.at) return a.at < b.at;
    return a.player < b.player;
  });
}

void split(Mediator& m, std::vector<int> group, const PieceSet& piece, int depth, bool minimal_envy) {
  m.note_depth(depth);
  const int size = static_cast<int>(group.size());
  if (size == 1) {
    m.give(group[0], piece);
    return;
  }
  const std::string step = "depth " + std::to_string(depth + 1);
  const int k = size / 2;
  const Rational ratio(k, size);

  std::vector<int> left, right;
  Rational at;
  int blame = -1;
  if (!minimal_envy) {
    const int noncutter = group.back();
    std::vector<Cut> cuts;
    for (int i = 0; i + 1 < size; ++i) cuts.push_back({m.mark_share_right(group[i], step, piece, ratio), group[i]});
    sort_cuts(cuts);
    const Cut& chosen = cuts[k - 1];
    at = chosen.at;
    blame = chosen.player;
    const Rational vl = m.eval(noncutter, step, piece.clip(piece.lo(), at));
    const Rational vr = m.eval(noncutter, step, piece.clip(at, piece.hi()));
    const bool goes_left = !(vl * Rational(size) < Rational(k) * (vl + vr));
    for (int r = 0; r + 1 < k; ++r) left.push_back(cuts[r].player);
    for (std::size_t r = k; r < cuts.size(); ++r) right.push_back(cuts[r].player);
    (goes_left ? left : right).push_back(noncutter);
    (goes_left ? right : left).push_back(chosen.player);
  } else {
    // everyone marks; the split lies strictly between the k-th and (k+1)-th marks
    std::vector<Cut> cuts;
    for (int p : group) cuts.push_back({m.mark_share_right(p, step, piece, ratio), p});
    sort_cuts(cuts);
    at = cuts[k - 1].at == cuts[k].at ? cuts[k - 1].at : midpoint(cuts[k - 1].at, cuts[k].at);
    blame = cuts[k - 1].player;
    for (int r = 0; r < size; ++r) (r < k ? left : right).push_back(cuts[r].player);
  }

  PieceSet lpiece = piece.clip(piece.lo(), at);
  PieceSet rpiece = piece.clip(at, piece.hi());
  if (lpiece.empty() || rpiece.empty()) {
    if (m.truthful(blame)) throw InternalError("divide and conquer produced an empty half");
    throw ProtocolViolation(blame, step, "cut at the edge of the piece");
  }
  m.trace(step, -1, "split", {{"at", at}});
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  split(m, std::move(left), lpiece, depth + 1, minimal_envy);
  split(m, std::move(right), rpiece, depth + 1, minimal_envy);
}

}  // namespace

void run_divide_and_conquer(Mediator& m, bool minimal_envy) {
  std::vector<int> group;
  for (int i = 0; i < m.player_count(); ++i) group.push_back(i);
  split(m, std::move(group), PieceSet::whole(), 0, minimal_envy);
}

}  // namespace cakecut
