#pragma once

#include <array>
#include <string>
#include <string_view>

#include "cakecut/engine.hpp"

namespace cakecut {

enum class CyopStrategy { None, LeftRight };

// Whole-cake entry points; player indices are 0..n-1.
void run_cut_and_choose(Mediator& m);
void run_selfridge_conway(Mediator& m);
void run_last_diminisher(Mediator& m);
void run_lone_chooser(Mediator& m);
void run_lone_divider(Mediator& m);
void run_cut_your_own_piece(Mediator& m, CyopStrategy strategy);
void run_divide_and_conquer(Mediator& m, bool minimal_envy);
void run_recursive_divide_and_choose(Mediator& m);
void run_enhanced_four(Mediator& m, bool strong_fair);
void run_enhanced_general(Mediator& m, bool strong_fair);

// Building blocks shared between protocols.

/// `cutter` halves `domain` by its own measure, `chooser` takes the better half.
void cut_and_choose_on(Mediator& m, int cutter, int chooser, const PieceSet& domain, std::string_view step);

/// Three-player envy-free division of `domain`; players in role order
/// (cutter, trimmer, first chooser). Step labels are `prefix` + "4".."12".
void selfridge_conway_on(Mediator& m, std::array<int, 3> players, const PieceSet& domain,
                         const std::string& prefix = "");

}  // namespace cakecut
