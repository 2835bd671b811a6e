#include "zoneroute/error.hpp"

namespace zoneroute {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::MalformedInput: return "MalformedInput";
  case ErrorKind::QubitOutOfRange: return "QubitOutOfRange";
  case ErrorKind::SelfPair: return "SelfPair";
  case ErrorKind::DuplicateGateInBlock: return "DuplicateGateInBlock";
  case ErrorKind::InfeasibleSpec: return "InfeasibleSpec";
  case ErrorKind::DegenerateSpec: return "DegenerateSpec";
  case ErrorKind::InvalidConfig: return "InvalidConfig";
  case ErrorKind::SiteOutOfBounds: return "SiteOutOfBounds";
  case ErrorKind::InsufficientCapacity: return "InsufficientCapacity";
  case ErrorKind::EmptyInput: return "EmptyInput";
  case ErrorKind::InsufficientStorage: return "InsufficientStorage";
  case ErrorKind::InsufficientCompute: return "InsufficientCompute";
  case ErrorKind::UnplacedQubit: return "UnplacedQubit";
  case ErrorKind::StaleMove: return "StaleMove";
  case ErrorKind::OccupancyViolation: return "OccupancyViolation";
  case ErrorKind::InvalidAodCount: return "InvalidAodCount";
  case ErrorKind::DecoherenceOverflow: return "DecoherenceOverflow";
  case ErrorKind::InconsistentCounters: return "InconsistentCounters";
  case ErrorKind::IncompleteTimeline: return "IncompleteTimeline";
  }
  return "Unknown";
}

} // namespace zoneroute
