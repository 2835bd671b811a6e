#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zoneroute/move_scheduler.hpp"

namespace zoneroute {

/// Serialized schedule. Times are microseconds; sites are
/// ["compute"|"storage", col, row]. Keys come out sorted.
nlohmann::json schedule_to_json(const Schedule& s);

/// Reads a schedule document back. Derived move fields (positions,
/// distance, kind) are recomputed from the geometry; recorded durations,
/// timestamps, and counters are kept as written so verify_schedule can
/// check them. Throws MalformedInput.
Schedule schedule_from_json(const nlohmann::json& doc);

struct VerifyViolation {
  std::string kind;
  std::string detail;
};

/// Replays a schedule from its initial layout and re-checks every
/// invariant: no stale or repeated moves, storage capacity in transit,
/// pairwise non-conflict inside each CollMove, AOD count per chunk, the
/// chunk duration formula, the excitation-time layout, n_i, timestamps and
/// counters. An empty result means the schedule is clean.
std::vector<VerifyViolation> verify_schedule(const Schedule& s);

} // namespace zoneroute
