#include "cakecut/protocols.hpp"

namespace cakecut {

void run_lone_chooser(Mediator& m) {
  const int n = m.player_count();
  std::vector<PieceSet> holdings{PieceSet::whole()};
  for (int k = 1; k < n; ++k) {
    const std::string step = "round " + std::to_string(k);
    const int chooser = k;
    PieceSet taken;
    for (int holder = 0; holder < k; ++holder) {
      const auto plate = m.cut_equal(holder, step, holdings[holder], k + 1);
      const std::size_t pick = m.choose(chooser, step, plate);
      holdings[holder] = holdings[holder].minus(plate[pick]);
      taken = taken.unite(plate[pick]);
    }
    holdings.push_back(std::move(taken));
  }
  for (int i = 0; i < n; ++i) m.give(i, holdings[i]);
}

}  // namespace cakecut
