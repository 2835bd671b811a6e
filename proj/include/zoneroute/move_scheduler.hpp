#pragma once

#include <cstddef>
#include <vector>

#include "zoneroute/hardware.hpp"
#include "zoneroute/placement.hpp"
#include "zoneroute/router.hpp"
#include "zoneroute/stage_scheduler.hpp"

namespace zoneroute {

/// CollMoves run side by side on separate AODs.
struct ParallelChunk {
  std::vector<CollMove> collmoves; ///< index = AOD
  double duration_s = 0.0;         ///< transfer time + longest member
};

struct StageSchedule {
  std::size_t block = 0;
  Stage stage;
  std::vector<ParallelChunk> chunks;
  double start_s = 0.0;
  double excitation_s = 0.0;
  /// Non-interacting qubits left in the compute zone at excitation (n_i).
  std::size_t idle_in_compute = 0;

  std::size_t move_count() const;
};

struct ScheduleCounters {
  std::size_t stages = 0;        ///< S
  std::size_t transfers = 0;     ///< N_trans
  std::size_t excited_idle = 0;  ///< sum of n_i
  std::size_t gates = 0;         ///< g2

  friend bool operator==(const ScheduleCounters&,
                         const ScheduleCounters&) = default;
};

enum class QubitState { Storage, Compute, Transit };

struct ZoneInterval {
  double start_s = 0.0;
  double end_s = 0.0;
  QubitState state = QubitState::Storage;
};

struct Schedule {
  std::size_t num_qubits = 0;
  RoutingMode mode = RoutingMode::WithStorage;
  std::size_t n_aods = 1;
  Hardware hw;
  Placement initial;
  std::vector<StageSchedule> stages;
  ScheduleCounters counters;
  double end_s = 0.0; ///< movement and excitation time, no 1Q layers
  /// Per-qubit zone history covering [0, end_s].
  std::vector<std::vector<ZoneInterval>> timeline;
};

/// Stable sort by n_in - n_out, descending.
std::vector<CollMove> order_collmoves(std::vector<CollMove> groups);

/// Sequential chunking: chunk r holds CollMoves r*n_aods ... r*n_aods +
/// n_aods - 1. Throws InvalidAodCount when n_aods < 1.
std::vector<ParallelChunk> schedule_aods(const std::vector<CollMove>& ordered,
                                         std::size_t n_aods,
                                         const HardwareParams& params);

double chunk_duration(const std::vector<CollMove>& collmoves,
                      const HardwareParams& params);

/// Routes every stage in plan order, carrying the layout across stages and
/// blocks, and assembles the timed schedule. Excitation (t_rydberg) follows
/// the last chunk of each stage.
Schedule build_schedule(const StagePlan& plan, const Placement& initial,
                        RoutingMode mode, std::size_t n_aods,
                        const Hardware& hw);

/// Derives the per-qubit zone history from stage contents and timestamps.
/// A qubit is in Transit for the whole window of a chunk that moves it.
std::vector<std::vector<ZoneInterval>> compute_timeline(const Schedule& s);

} // namespace zoneroute
