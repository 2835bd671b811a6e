#pragma once

#include <optional>
#include <vector>

#include "zoneroute/circuit.hpp"
#include "zoneroute/hardware.hpp"
#include "zoneroute/move_scheduler.hpp"

namespace zoneroute {

struct FidelityReport {
  double f_cz = 1.0;
  double f_exc = 1.0;
  double f_trans = 1.0;
  double f_dec = 1.0;
  std::optional<double> f_1q;
  double total = 1.0;
  double exe_time_s = 0.0;
  ScheduleCounters counters;
  std::vector<double> idle_s; ///< T_q per qubit
};

/// Per-qubit idle time: wall time spent outside the storage zone (including
/// its own transfers and flight) minus the excitations it takes part in.
/// Throws IncompleteTimeline if the zone history does not cover the run.
std::vector<double> compute_idle_times(const Schedule& s);

/// Sum over stages of chunk durations plus one excitation, plus
/// (blocks + 1) single-qubit layers when include_1q is set.
double execution_time(const Schedule& s, const Circuit& c,
                      const HardwareParams& params, bool include_1q);

/// Product-form output fidelity:
///   f2^g2 * f_exc^(sum n_i) * f_trans^N_trans * prod_q (1 - T_q / T2)
/// times f1^g1 when include_1q is set and the circuit carries g1.
FidelityReport evaluate(const Schedule& s, const Circuit& c,
                        const HardwareParams& params, bool include_1q);

} // namespace zoneroute
