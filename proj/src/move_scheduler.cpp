#include "zoneroute/move_scheduler.hpp"

#include <algorithm>

#include "zoneroute/error.hpp"

namespace zoneroute {

std::size_t StageSchedule::move_count() const {
  std::size_t n = 0;
  for (const auto& chunk : chunks) {
    for (const auto& cm : chunk.collmoves) {
      n += cm.moves.size();
    }
  }
  return n;
}

std::vector<CollMove> order_collmoves(std::vector<CollMove> groups) {
  std::stable_sort(groups.begin(), groups.end(),
                   [](const CollMove& l, const CollMove& r) {
                     return l.storage_balance() > r.storage_balance();
                   });
  return groups;
}

double chunk_duration(const std::vector<CollMove>& collmoves,
                      const HardwareParams& params) {
  double longest = 0.0;
  for (const auto& cm : collmoves) {
    longest = std::max(longest, cm.duration_s);
  }
  return params.chunk_transfers * params.t_trans + longest;
}

std::vector<ParallelChunk> schedule_aods(const std::vector<CollMove>& ordered,
                                         std::size_t n_aods,
                                         const HardwareParams& params) {
  if (n_aods < 1) {
    throw Error(ErrorKind::InvalidAodCount, "at least one AOD is required");
  }
  std::vector<ParallelChunk> chunks;
  for (std::size_t i = 0; i < ordered.size(); i += n_aods) {
    ParallelChunk chunk;
    const auto end = std::min(ordered.size(), i + n_aods);
    chunk.collmoves.assign(ordered.begin() + i, ordered.begin() + end);
    chunk.duration_s = chunk_duration(chunk.collmoves, params);
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

Schedule build_schedule(const StagePlan& plan, const Placement& initial,
                        RoutingMode mode, std::size_t n_aods,
                        const Hardware& hw) {
  if (n_aods < 1) {
    throw Error(ErrorKind::InvalidAodCount, "at least one AOD is required");
  }
  Schedule s;
  s.num_qubits = initial.num_qubits();
  s.mode = mode;
  s.n_aods = n_aods;
  s.hw = hw;
  s.initial = initial;

  Placement layout = initial;
  double t = 0.0;
  for (std::size_t b = 0; b < plan.blocks.size(); ++b) {
    for (const auto& stage : plan.blocks[b]) {
      auto routed = plan_stage_moves(layout, stage, mode, hw);
      auto groups = group_moves(std::move(routed.moves), hw.params);

      StageSchedule st;
      st.block = b;
      st.stage = stage;
      st.start_s = t;
      st.chunks = schedule_aods(order_collmoves(std::move(groups)), n_aods,
                                hw.params);
      for (const auto& chunk : st.chunks) {
        for (const auto& cm : chunk.collmoves) {
          layout = apply_collmove(layout, cm, CapacityCheck::StorageOnly);
        }
        t += chunk.duration_s;
      }
      layout.check_capacity();
      st.excitation_s = t;
      t += hw.params.t_rydberg;

      for (QubitId q = 0; q < s.num_qubits; ++q) {
        if (layout.site_of(q).zone == Zone::Compute && !stage.interacts(q)) {
          ++st.idle_in_compute;
        }
      }
      s.counters.stages += 1;
      s.counters.transfers += 2 * st.move_count();
      s.counters.excited_idle += st.idle_in_compute;
      s.counters.gates += stage.gates.size();
      s.stages.push_back(std::move(st));
    }
  }
  s.end_s = t;
  s.timeline = compute_timeline(s);
  return s;
}

std::vector<std::vector<ZoneInterval>> compute_timeline(const Schedule& s) {
  std::vector<std::vector<ZoneInterval>> timeline(s.num_qubits);
  std::vector<QubitState> state(s.num_qubits);
  std::vector<double> since(s.num_qubits, 0.0);
  for (QubitId q = 0; q < s.num_qubits; ++q) {
    state[q] = s.initial.site_of(q).zone == Zone::Storage
                   ? QubitState::Storage
                   : QubitState::Compute;
  }
  auto enter = [&](QubitId q, QubitState next, double at) {
    if (next == state[q]) {
      return;
    }
    if (at > since[q]) {
      timeline[q].push_back({since[q], at, state[q]});
    }
    state[q] = next;
    since[q] = at;
  };

  for (const auto& st : s.stages) {
    double t = st.start_s;
    for (const auto& chunk : st.chunks) {
      const double end = t + chunk.duration_s;
      for (const auto& cm : chunk.collmoves) {
        for (const auto& m : cm.moves) {
          enter(m.qubit, QubitState::Transit, t);
        }
      }
      for (const auto& cm : chunk.collmoves) {
        for (const auto& m : cm.moves) {
          enter(m.qubit,
                m.to.zone == Zone::Storage ? QubitState::Storage
                                           : QubitState::Compute,
                end);
        }
      }
      t = end;
    }
  }
  for (QubitId q = 0; q < s.num_qubits; ++q) {
    if (s.end_s > since[q] || timeline[q].empty()) {
      timeline[q].push_back({since[q], s.end_s, state[q]});
    }
  }
  return timeline;
}

} // namespace zoneroute
