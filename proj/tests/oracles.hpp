#pragma once

#include <cstddef>
#include <vector>

#include "zoneroute/circuit.hpp"
#include "zoneroute/hardware.hpp"
#include "zoneroute/move_scheduler.hpp"
#include "zoneroute/router.hpp"

namespace oracle {

using zoneroute::CZGate;

/// Minimum number of qubit-disjoint groups covering the gates, by
/// exhaustive backtracking. Intended for blocks of at most ~10 gates.
std::size_t min_stage_count(const std::vector<CZGate>& gates);

/// Largest number of other gates sharing a qubit with any one gate.
std::size_t max_conflict_degree(const std::vector<CZGate>& gates);

/// Largest number of gates touching a single qubit.
std::size_t max_qubit_load(const std::vector<CZGate>& gates);

/// Site coordinates in micrometres, computed from the pitch and gap alone.
struct Point {
  double x;
  double y;
};
Point site_point(const zoneroute::Site& s, const zoneroute::HardwareParams& p);

/// Two moves conflict when the relative order (<, =, >) of their x or y
/// coordinates differs between start and end.
bool moves_conflict(const zoneroute::Site& from_a, const zoneroute::Site& to_a,
                    const zoneroute::Site& from_b, const zoneroute::Site& to_b,
                    const zoneroute::HardwareParams& p);

/// Number of conflicting pairs among the moves.
std::size_t conflicting_pairs(const std::vector<zoneroute::Move1Q>& moves,
                              const zoneroute::HardwareParams& p);

/// Quantities recomputed by replaying a schedule as an event log.
struct Replay {
  std::size_t g2 = 0;
  std::size_t stages = 0;
  std::size_t sum_idle_excited = 0;
  std::size_t transfers = 0;
  std::vector<double> t_q;
  double t_exe = 0.0;
  double total = 1.0;
};

/// Replays moves and excitations from the schedule's initial layout,
/// recomputing chunk durations from geometry and accumulating each
/// qubit's time outside storage.
Replay replay(const zoneroute::Schedule& s,
              const zoneroute::HardwareParams& p);

/// Total out-of-storage qubit time for a fixed sequence of CollMoves run
/// one after another from `initial` on a single AOD.
double out_of_storage_time(const zoneroute::Placement& initial,
                           const std::vector<zoneroute::CollMove>& order,
                           const zoneroute::HardwareParams& p);

bool near(double a, double b, double rel);

/// Six qubits, blocks {(0,1),(2,3),(4,5)} then {(1,2),(3,4)}.
zoneroute::Circuit motivation_circuit();

} // namespace oracle
