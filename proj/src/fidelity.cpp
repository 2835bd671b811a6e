#include "zoneroute/fidelity.hpp"

#include <algorithm>
#include <cmath>

#include "zoneroute/error.hpp"

namespace zoneroute {

std::vector<double> compute_idle_times(const Schedule& s) {
  if (s.timeline.size() != s.num_qubits) {
    throw Error(ErrorKind::IncompleteTimeline,
                "timeline has " + std::to_string(s.timeline.size()) +
                    " entries for " + std::to_string(s.num_qubits) +
                    " qubits");
  }
  std::vector<std::size_t> interactions(s.num_qubits, 0);
  for (const auto& st : s.stages) {
    for (const auto& g : st.stage.gates) {
      ++interactions.at(g.a);
      ++interactions.at(g.b);
    }
  }

  std::vector<double> idle(s.num_qubits, 0.0);
  for (QubitId q = 0; q < s.num_qubits; ++q) {
    const auto& iv = s.timeline[q];
    double cursor = 0.0;
    double outside = 0.0;
    for (const auto& i : iv) {
      if (i.start_s != cursor || i.end_s < i.start_s) {
        throw Error(ErrorKind::IncompleteTimeline,
                    "gap in zone history of qubit " + std::to_string(q));
      }
      if (i.state != QubitState::Storage) {
        outside += i.end_s - i.start_s;
      }
      cursor = i.end_s;
    }
    if (cursor != s.end_s) {
      throw Error(ErrorKind::IncompleteTimeline,
                  "zone history of qubit " + std::to_string(q) +
                      " ends early");
    }
    idle[q] = std::max(0.0, outside - s.hw.params.t_rydberg *
                                          static_cast<double>(interactions[q]));
  }
  return idle;
}

double execution_time(const Schedule& s, const Circuit& c,
                      const HardwareParams& params, bool include_1q) {
  double t = 0.0;
  for (const auto& st : s.stages) {
    for (const auto& chunk : st.chunks) {
      t += chunk.duration_s;
    }
    t += params.t_rydberg;
  }
  if (include_1q) {
    t += static_cast<double>(c.blocks.size() + 1) * params.t_1q;
  }
  return t;
}

namespace {

ScheduleCounters recount(const Schedule& s) {
  ScheduleCounters k;
  for (const auto& st : s.stages) {
    k.stages += 1;
    k.transfers += 2 * st.move_count();
    k.excited_idle += st.idle_in_compute;
    k.gates += st.stage.gates.size();
  }
  return k;
}

} // namespace

FidelityReport evaluate(const Schedule& s, const Circuit& c,
                        const HardwareParams& params, bool include_1q) {
  const auto k = recount(s);
  if (!(k == s.counters) || k.gates != gate_count(c)) {
    throw Error(ErrorKind::InconsistentCounters,
                "schedule counters disagree with its contents or circuit");
  }

  FidelityReport r;
  r.counters = k;
  r.idle_s = compute_idle_times(s);
  r.f_cz = std::pow(params.f2, static_cast<double>(k.gates));
  r.f_exc = std::pow(params.f_exc, static_cast<double>(k.excited_idle));
  r.f_trans = std::pow(params.f_trans, static_cast<double>(k.transfers));
  for (QubitId q = 0; q < r.idle_s.size(); ++q) {
    if (r.idle_s[q] >= params.t2) {
      throw Error(ErrorKind::DecoherenceOverflow,
                  "qubit " + std::to_string(q) + " idles " +
                      std::to_string(r.idle_s[q]) + " s, beyond T2");
    }
    r.f_dec *= 1.0 - r.idle_s[q] / params.t2;
  }
  r.total = r.f_cz * r.f_exc * r.f_trans * r.f_dec;
  if (include_1q && c.num_1q_gates) {
    r.f_1q = std::pow(params.f1, static_cast<double>(*c.num_1q_gates));
    r.total *= *r.f_1q;
  }
  r.exe_time_s = execution_time(s, c, params, include_1q);
  return r;
}

} // namespace zoneroute
