#include "cakecut/dgef.hpp"

#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace cakecut {

namespace {

constexpr std::array<ProtocolId, 9> kTable{
    ProtocolId::LastDiminisher,      ProtocolId::LoneChooser,
    ProtocolId::LoneDivider,         ProtocolId::CutYourOwnPiece,
    ProtocolId::CutYourOwnPieceLeftRight, ProtocolId::DivideAndConquer,
    ProtocolId::MinimalEnvyDivideAndConquer, ProtocolId::RecursiveDivideAndChoose,
    ProtocolId::EnhancedGeneral,
};

void require(bool ok, ProtocolId id, std::int64_t n) {
  if (!ok) {
    throw std::invalid_argument("no DGEF value for " + std::string(protocol_name(id)) + " at n = " +
                                std::to_string(n));
  }
}

}  // namespace

int floor_log2(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("log of " + std::to_string(n));
  return std::bit_width(static_cast<std::uint64_t>(n)) - 1;
}

std::int64_t dgef_formula(ProtocolId id, std::int64_t n) {
  switch (id) {
    case ProtocolId::CutAndChoose:
      require(n == 2, id, n);
      return 2;
    case ProtocolId::SelfridgeConway:
      require(n == 3, id, n);
      return 6;
    case ProtocolId::LastDiminisher:
      require(n >= 3, id, n);
      return 2 + n * (n - 1) / 2;
    case ProtocolId::LoneChooser:
    case ProtocolId::RecursiveDivideAndChoose:
      require(n >= 2, id, n);
      return n;
    case ProtocolId::LoneDivider:
      require(n >= 3, id, n);
      return 2 * n - 2;
    case ProtocolId::CutYourOwnPiece:
      require(n >= 3, id, n);
      return n;
    case ProtocolId::CutYourOwnPieceLeftRight:
      require(n >= 3, id, n);
      return 2 * n - 2;
    case ProtocolId::DivideAndConquer:
    case ProtocolId::MinimalEnvyDivideAndConquer: {
      require(n >= 1, id, n);
      const int l = floor_log2(n);
      return n * l + 2 * n - (std::int64_t{1} << (l + 1));
    }
    case ProtocolId::EnhancedFour:
    case ProtocolId::StrongFairFour:
      require(n == 4, id, n);
      return 10;
    case ProtocolId::EnhancedGeneral:
    case ProtocolId::StrongFairGeneral:
      require(n >= (id == ProtocolId::EnhancedGeneral ? 3 : 4), id, n);
      if (n == 4) return 10;
      return (n * n + 1) / 2 + 1;
  }
  throw std::invalid_argument("unknown protocol");
}

std::int64_t dc_recurrence(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("recurrence needs n >= 1");
  static std::mutex lock;
  static std::unordered_map<std::int64_t, std::int64_t> memo{{1, 0}};
  {
    std::lock_guard guard(lock);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  const std::int64_t value = dc_recurrence(n / 2) + dc_recurrence(n - n / 2) + n;
  std::lock_guard guard(lock);
  memo.emplace(n, value);
  return value;
}

std::span<const ProtocolId> table_protocols() { return kTable; }

}  // namespace cakecut
