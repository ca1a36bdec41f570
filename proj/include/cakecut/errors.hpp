#pragma once

#include <stdexcept>
#include <string>

namespace cakecut {

/// Out-of-range or inverted interval bounds.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A mark query asked for more value than the domain holds beyond the anchor.
class InsufficientValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed valuation (non-monotone breakpoints, non-positive density, bad normalization).
class InvalidValuation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Protocol asked to run with a player count it does not support.
class UnsupportedPlayerCount : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An agent's answer broke a structural precondition of the protocol.
class ProtocolViolation : public std::runtime_error {
 public:
  ProtocolViolation(int agent, std::string step, const std::string& what)
      : std::runtime_error("agent p" + std::to_string(agent + 1) + " at step " + step + ": " + what),
        agent_(agent),
        step_(std::move(step)) {}

  int agent() const { return agent_; }
  const std::string& step() const { return step_; }

 private:
  int agent_;
  std::string step_;
};

/// An invariant the protocol proves for truthful play did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cakecut
