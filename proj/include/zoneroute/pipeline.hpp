#pragma once

#include <cstddef>

#include "zoneroute/circuit.hpp"
#include "zoneroute/fidelity.hpp"
#include "zoneroute/hardware.hpp"
#include "zoneroute/move_scheduler.hpp"
#include "zoneroute/stage_scheduler.hpp"

namespace zoneroute {

struct CompileOptions {
  RoutingMode mode = RoutingMode::WithStorage;
  std::size_t n_aods = 1;
  double alpha = 0.5;
  bool include_1q = false;
};

struct CompileResult {
  StagePlan plan;
  Schedule schedule;
  FidelityReport report;
  double compile_ms = 0.0; ///< wall clock of the whole pipeline
};

/// Stage partition and ordering, continuous routing, CollMove scheduling,
/// and fidelity evaluation, starting from the row-major initial layout.
CompileResult compile(const Circuit& c, const Hardware& hw,
                      const CompileOptions& options);

} // namespace zoneroute
