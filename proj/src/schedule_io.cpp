#include "zoneroute/schedule_io.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "zoneroute/error.hpp"

namespace zoneroute {

namespace {

constexpr double us = 1e6;

nlohmann::json site_json(const Site& s) {
  return {to_string(s.zone), s.col, s.row};
}

Site site_from(const nlohmann::json& v) {
  if (!v.is_array() || v.size() != 3 || !v[0].is_string() ||
      !v[1].is_number_integer() || !v[2].is_number_integer()) {
    throw Error(ErrorKind::MalformedInput,
                "site must be [zone, col, row], got " + v.dump());
  }
  const auto zone = v[0].get<std::string>();
  if (zone != "compute" && zone != "storage") {
    throw Error(ErrorKind::MalformedInput, "unknown zone '" + zone + "'");
  }
  return {zone == "compute" ? Zone::Compute : Zone::Storage, v[1].get<int>(),
          v[2].get<int>()};
}

} // namespace

nlohmann::json schedule_to_json(const Schedule& s) {
  nlohmann::json doc;
  doc["num_qubits"] = s.num_qubits;
  doc["mode"] = to_string(s.mode);
  doc["n_aods"] = s.n_aods;
  doc["hardware"] = hardware_to_json(s.hw);

  auto initial = nlohmann::json::array();
  for (QubitId q = 0; q < s.num_qubits; ++q) {
    initial.push_back(site_json(s.initial.site_of(q)));
  }
  doc["initial_placement"] = std::move(initial);

  auto stages = nlohmann::json::array();
  for (const auto& st : s.stages) {
    nlohmann::json js;
    js["block"] = st.block;
    auto gates = nlohmann::json::array();
    for (const auto& g : st.stage.gates) {
      gates.push_back({g.a, g.b});
    }
    js["gates"] = std::move(gates);
    js["start_us"] = st.start_s * us;
    js["excitation_us"] = st.excitation_s * us;
    js["n_i"] = st.idle_in_compute;
    auto chunks = nlohmann::json::array();
    for (const auto& chunk : st.chunks) {
      auto cms = nlohmann::json::array();
      for (std::size_t aod = 0; aod < chunk.collmoves.size(); ++aod) {
        const auto& cm = chunk.collmoves[aod];
        auto moves = nlohmann::json::array();
        for (const auto& m : cm.moves) {
          moves.push_back({{"qubit", m.qubit},
                           {"from", site_json(m.from)},
                           {"to", site_json(m.to)},
                           {"distance_um", m.distance_um}});
        }
        cms.push_back({{"aod", aod},
                       {"duration_us", cm.duration_s * us},
                       {"max_distance_um", cm.max_distance_um},
                       {"n_in", cm.n_in},
                       {"n_out", cm.n_out},
                       {"moves", std::move(moves)}});
      }
      chunks.push_back(
          {{"duration_us", chunk.duration_s * us}, {"collmoves", cms}});
    }
    js["chunks"] = std::move(chunks);
    stages.push_back(std::move(js));
  }
  doc["stages"] = std::move(stages);
  doc["counters"] = {{"S", s.counters.stages},
                     {"N_trans", s.counters.transfers},
                     {"sum_n_i", s.counters.excited_idle},
                     {"g2", s.counters.gates}};
  doc["T_exe_us"] = s.end_s * us;
  return doc;
}

Schedule schedule_from_json(const nlohmann::json& doc) {
  try {
    Schedule s;
    s.num_qubits = doc.at("num_qubits").get<std::size_t>();
    s.mode = parse_mode(doc.at("mode").get<std::string>());
    s.n_aods = doc.at("n_aods").get<std::size_t>();
    s.hw = hardware_from_json(doc.at("hardware"), s.num_qubits);

    const auto& initial = doc.at("initial_placement");
    if (!initial.is_array() || initial.size() != s.num_qubits) {
      throw Error(ErrorKind::MalformedInput,
                  "initial_placement must list every qubit");
    }
    s.initial = Placement(s.hw.layout, s.num_qubits);
    for (QubitId q = 0; q < s.num_qubits; ++q) {
      s.initial.place(q, site_from(initial[q]));
    }

    for (const auto& js : doc.at("stages")) {
      StageSchedule st;
      st.block = js.at("block").get<std::size_t>();
      for (const auto& g : js.at("gates")) {
        const auto a = g.at(0).get<QubitId>();
        const auto b = g.at(1).get<QubitId>();
        if (a >= s.num_qubits || b >= s.num_qubits || a == b) {
          throw Error(ErrorKind::MalformedInput, "bad gate " + g.dump());
        }
        st.stage.gates.push_back(CZGate::between(a, b));
      }
      st.start_s = js.at("start_us").get<double>() / us;
      st.excitation_s = js.at("excitation_us").get<double>() / us;
      st.idle_in_compute = js.at("n_i").get<std::size_t>();
      for (const auto& jc : js.at("chunks")) {
        ParallelChunk chunk;
        chunk.duration_s = jc.at("duration_us").get<double>() / us;
        for (const auto& jm : jc.at("collmoves")) {
          std::vector<Move1Q> moves;
          for (const auto& mv : jm.at("moves")) {
            const auto q = mv.at("qubit").get<QubitId>();
            if (q >= s.num_qubits) {
              throw Error(ErrorKind::MalformedInput,
                          "move of unknown qubit " + std::to_string(q));
            }
            moves.push_back(make_move(q, site_from(mv.at("from")),
                                      site_from(mv.at("to")), s.hw));
          }
          auto cm = make_collmove(std::move(moves), s.hw.params);
          cm.duration_s = jm.at("duration_us").get<double>() / us;
          chunk.collmoves.push_back(std::move(cm));
        }
        st.chunks.push_back(std::move(chunk));
      }
      s.stages.push_back(std::move(st));
    }

    const auto& k = doc.at("counters");
    s.counters.stages = k.at("S").get<std::size_t>();
    s.counters.transfers = k.at("N_trans").get<std::size_t>();
    s.counters.excited_idle = k.at("sum_n_i").get<std::size_t>();
    s.counters.gates = k.at("g2").get<std::size_t>();
    s.end_s = doc.at("T_exe_us").get<double>() / us;
    s.timeline = compute_timeline(s);
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedInput) {
      throw;
    }
    throw Error(ErrorKind::MalformedInput, e.what());
  }
}

namespace {

constexpr double time_tolerance_s = 1e-12;

bool close(double a, double b) {
  return std::abs(a - b) <= time_tolerance_s;
}

std::string fmt_us(double seconds) {
  return std::to_string(seconds * us) + " us";
}

} // namespace

std::vector<VerifyViolation> verify_schedule(const Schedule& s) {
  std::vector<VerifyViolation> out;
  auto report = [&](std::string kind, std::string detail) {
    out.push_back({std::move(kind), std::move(detail)});
  };
  const auto& params = s.hw.params;

  Placement layout = s.initial;
  for (const auto& site : layout.overfull_sites()) {
    report("OccupancyViolation",
           "initial layout: " + to_string(site) + " holds " +
               std::to_string(layout.occupants(site).size()) + " qubits");
  }

  ScheduleCounters k;
  double t = 0.0;
  double last_excitation = -1.0;
  for (std::size_t si = 0; si < s.stages.size(); ++si) {
    const auto& st = s.stages[si];
    const std::string where = "stage " + std::to_string(si);
    if (!close(st.start_s, t)) {
      report("TimingViolation", where + " starts at " + fmt_us(st.start_s) +
                                    ", expected " + fmt_us(t));
    }
    std::set<QubitId> moved;
    std::size_t move_count = 0;
    for (std::size_t ci = 0; ci < st.chunks.size(); ++ci) {
      const auto& chunk = st.chunks[ci];
      const std::string cwhere = where + " chunk " + std::to_string(ci);
      if (chunk.collmoves.empty() || chunk.collmoves.size() > s.n_aods) {
        report("AodViolation", cwhere + " uses " +
                                   std::to_string(chunk.collmoves.size()) +
                                   " AODs of " + std::to_string(s.n_aods));
      }
      double longest = 0.0;
      for (std::size_t ai = 0; ai < chunk.collmoves.size(); ++ai) {
        const auto& cm = chunk.collmoves[ai];
        const std::string mwhere = cwhere + " aod " + std::to_string(ai);
        double max_distance = 0.0;
        for (std::size_t i = 0; i < cm.moves.size(); ++i) {
          max_distance = std::max(max_distance, cm.moves[i].distance_um);
          for (std::size_t j = i + 1; j < cm.moves.size(); ++j) {
            if (conflicts(cm.moves[i], cm.moves[j])) {
              report("ConflictViolation",
                     mwhere + ": moves of qubits " +
                         std::to_string(cm.moves[i].qubit) + " and " +
                         std::to_string(cm.moves[j].qubit) + " conflict");
            }
          }
        }
        const double expected = move_duration(max_distance, params);
        if (!close(cm.duration_s, expected)) {
          report("DurationViolation", mwhere + " lasts " +
                                          fmt_us(cm.duration_s) +
                                          ", expected " + fmt_us(expected));
        }
        longest = std::max(longest, expected);
        move_count += cm.moves.size();
        for (const auto& m : cm.moves) {
          if (m.from == m.to) {
            report("StaleMove", mwhere + ": qubit " +
                                    std::to_string(m.qubit) +
                                    " moves onto its own site");
          }
          if (!moved.insert(m.qubit).second) {
            report("RepeatedMove", mwhere + ": qubit " +
                                       std::to_string(m.qubit) +
                                       " moves twice in one stage");
          }
          if (layout.site_of(m.qubit) != m.from) {
            report("StaleMove", mwhere + ": qubit " +
                                    std::to_string(m.qubit) + " is at " +
                                    to_string(layout.site_of(m.qubit)) +
                                    ", not " + to_string(m.from));
          }
        }
        for (const auto& m : cm.moves) {
          if (in_bounds(m.to, layout.layout())) {
            layout.place(m.qubit, m.to);
          }
        }
        for (const auto& site : layout.overfull_sites()) {
          if (site.zone == Zone::Storage) {
            report("OccupancyViolation",
                   mwhere + ": " + to_string(site) + " holds " +
                       std::to_string(layout.occupants(site).size()) +
                       " qubits");
          }
        }
      }
      const double expected = params.chunk_transfers * params.t_trans + longest;
      if (!close(chunk.duration_s, expected)) {
        report("DurationViolation", cwhere + " lasts " +
                                        fmt_us(chunk.duration_s) +
                                        ", expected " + fmt_us(expected));
      }
      t += chunk.duration_s;
    }

    for (const auto& v : validate_layout(layout, st.stage)) {
      const bool capacity = v.kind == ViolationKind::SiteOverCapacity ||
                            v.kind == ViolationKind::StorageOverCapacity;
      report(capacity ? "OccupancyViolation" : "LayoutViolation",
             where + ": " + to_string(v.kind) + " " + v.detail);
    }
    if (!close(st.excitation_s, t)) {
      report("TimingViolation", where + " excites at " +
                                    fmt_us(st.excitation_s) + ", expected " +
                                    fmt_us(t));
    }
    if (st.excitation_s <= last_excitation) {
      report("TimingViolation", where + " excitation not after the previous");
    }
    last_excitation = st.excitation_s;

    std::size_t idle = 0;
    for (QubitId q = 0; q < s.num_qubits; ++q) {
      if (layout.site_of(q).zone == Zone::Compute && !st.stage.interacts(q)) {
        ++idle;
      }
    }
    if (idle != st.idle_in_compute) {
      report("CounterViolation", where + " records n_i = " +
                                     std::to_string(st.idle_in_compute) +
                                     ", replay finds " + std::to_string(idle));
    }
    t += params.t_rydberg;
    k.stages += 1;
    k.transfers += 2 * move_count;
    k.excited_idle += idle;
    k.gates += st.stage.gates.size();
  }

  if (!(k == s.counters)) {
    report("CounterViolation",
           "recorded (S, N_trans, sum n_i, g2) = (" +
               std::to_string(s.counters.stages) + ", " +
               std::to_string(s.counters.transfers) + ", " +
               std::to_string(s.counters.excited_idle) + ", " +
               std::to_string(s.counters.gates) + "), replay finds (" +
               std::to_string(k.stages) + ", " + std::to_string(k.transfers) +
               ", " + std::to_string(k.excited_idle) + ", " +
               std::to_string(k.gates) + ")");
  }
  if (!close(s.end_s, t)) {
    report("TimingViolation",
           "total time " + fmt_us(s.end_s) + ", replay finds " + fmt_us(t));
  }
  return out;
}

} // namespace zoneroute
