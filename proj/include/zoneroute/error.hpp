#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zoneroute {

enum class ErrorKind {
  MalformedInput,
  QubitOutOfRange,
  SelfPair,
  DuplicateGateInBlock,
  InfeasibleSpec,
  DegenerateSpec,
  InvalidConfig,
  SiteOutOfBounds,
  InsufficientCapacity,
  EmptyInput,
  InsufficientStorage,
  InsufficientCompute,
  UnplacedQubit,
  StaleMove,
  OccupancyViolation,
  InvalidAodCount,
  DecoherenceOverflow,
  InconsistentCounters,
  IncompleteTimeline,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a machine-checkable error kind. All library failures
/// are reported through this type.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace zoneroute
