#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "cakecut/engine.hpp"

namespace cakecut {

/// Guaranteed number of envy-free relations of each protocol for n players.
/// Throws std::invalid_argument for n outside the protocol's range.
std::int64_t dgef_formula(ProtocolId id, std::int64_t n);

/// d(1) = 0, d(n) = d(floor(n/2)) + d(ceil(n/2)) + n, memoized.
std::int64_t dc_recurrence(std::int64_t n);

/// floor(log2 n) for n >= 1.
int floor_log2(std::int64_t n);

/// Protocols listed in the DGEF table, in column order.
std::span<const ProtocolId> table_protocols();

}  // namespace cakecut
