#include <array>

#include "cakecut/protocols.hpp"

namespace cakecut {

void cut_and_choose_on(Mediator& m, int cutter, int chooser, const PieceSet& domain, std::string_view step) {
  const auto halves = m.cut_equal(cutter, step, domain, 2);
  const std::size_t pick = m.choose(chooser, step, halves);
  m.give(chooser, halves[pick]);
  m.give(cutter, halves[1 - pick]);
}

void run_cut_and_choose(Mediator& m) { cut_and_choose_on(m, 0, 1, PieceSet::whole(), "1"); }

}  // namespace cakecut
