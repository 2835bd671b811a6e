#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "zoneroute/benchgen.hpp"
#include "zoneroute/error.hpp"
#include "zoneroute/fidelity.hpp"
#include "zoneroute/pipeline.hpp"

using namespace zoneroute;

namespace {

const HardwareParams P{};

Schedule hand_schedule(std::size_t n) {
  Schedule s;
  s.num_qubits = n;
  s.hw = Hardware{P, default_geometry(n)};
  s.initial = Placement(s.hw.layout, n);
  for (QubitId q = 0; q < n; ++q) {
    const int cols = s.hw.layout.storage_cols;
    s.initial.place(q, Site::storage(static_cast<int>(q) % cols,
                                     static_cast<int>(q) / cols));
  }
  return s;
}

void all_storage_timeline(Schedule& s) {
  s.timeline.assign(s.num_qubits, {ZoneInterval{0.0, s.end_s, QubitState::Storage}});
}

// Two stages with one gate each; the first carries two moves and leaves
// one idle qubit in compute.
Schedule two_stage_schedule(Circuit& c) {
  auto s = hand_schedule(4);
  c = Circuit{4, {CZBlock{{CZGate{0, 1}, CZGate{2, 3}}}}, std::nullopt};
  StageSchedule a;
  a.stage.gates = {CZGate{0, 1}};
  ParallelChunk ch;
  ch.collmoves.push_back(make_collmove(
      {make_move(0, Site::storage(0, 0), Site::compute(0, 0), s.hw),
       make_move(1, Site::storage(1, 0), Site::compute(1, 0), s.hw)},
      P));
  ch.duration_s = chunk_duration(ch.collmoves, P);
  a.chunks.push_back(ch);
  a.idle_in_compute = 1;
  StageSchedule b;
  b.stage.gates = {CZGate{2, 3}};
  s.stages = {a, b};
  s.counters = {2, 4, 1, 2};
  s.end_s = 1e-3;
  all_storage_timeline(s);
  return s;
}

} // namespace

TEST(Evaluate, EmptySchedule) {
  auto s = hand_schedule(3);
  all_storage_timeline(s);
  const auto r = evaluate(s, Circuit{3, {}, std::nullopt}, P, false);
  EXPECT_EQ(r.f_cz, 1.0);
  EXPECT_EQ(r.f_exc, 1.0);
  EXPECT_EQ(r.f_trans, 1.0);
  EXPECT_EQ(r.f_dec, 1.0);
  EXPECT_EQ(r.total, 1.0);
  EXPECT_EQ(r.exe_time_s, 0.0);
}

TEST(Evaluate, ProductOfFactors) {
  Circuit c;
  const auto s = two_stage_schedule(c);
  const auto r = evaluate(s, c, P, false);
  const double expected = 0.995 * 0.995 * 0.9975 * std::pow(0.999, 4);
  EXPECT_NEAR(r.total, expected, 1e-15);
  EXPECT_NEAR(r.total, 0.98361, 5e-6);
  EXPECT_EQ(r.f_dec, 1.0);
}

TEST(Evaluate, DecoherenceFactor) {
  auto s = hand_schedule(1);
  s.end_s = 15e-6;
  s.timeline = {{ZoneInterval{0.0, 15e-6, QubitState::Compute}}};
  const auto r = evaluate(s, Circuit{1, {}, std::nullopt}, P, false);
  EXPECT_NEAR(r.f_dec, 1.0 - 1e-5, 1e-15);
  EXPECT_NEAR(r.idle_s[0], 15e-6, 1e-18);
}

TEST(Evaluate, DecoherenceOverflow) {
  auto s = hand_schedule(1);
  s.end_s = 2.0;
  s.timeline = {{ZoneInterval{0.0, 2.0, QubitState::Compute}}};
  try {
    evaluate(s, Circuit{1, {}, std::nullopt}, P, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DecoherenceOverflow);
  }
}

TEST(Evaluate, InconsistentCounters) {
  Circuit c;
  auto s = two_stage_schedule(c);
  s.counters.transfers = 6;
  try {
    evaluate(s, c, P, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentCounters);
  }
  s.counters.transfers = 4;
  c.blocks[0].gates.pop_back();
  EXPECT_THROW(evaluate(s, c, P, false), Error);
}

TEST(Evaluate, SingleQubitLayersAreOptIn) {
  Circuit c;
  const auto s = two_stage_schedule(c);
  c.num_1q_gates = 10;
  const auto without = evaluate(s, c, P, false);
  const auto with = evaluate(s, c, P, true);
  EXPECT_FALSE(without.f_1q.has_value());
  ASSERT_TRUE(with.f_1q.has_value());
  EXPECT_NEAR(*with.f_1q, std::pow(0.9999, 10), 1e-15);
  EXPECT_NEAR(with.total, without.total * *with.f_1q, 1e-15);
  EXPECT_NEAR(with.exe_time_s - without.exe_time_s, 2 * P.t_1q, 1e-15);
}

TEST(IdleTimes, IncompleteTimeline) {
  auto s = hand_schedule(2);
  s.end_s = 1e-3;
  s.timeline = {{ZoneInterval{0.0, 1e-3, QubitState::Storage}}};
  EXPECT_THROW(compute_idle_times(s), Error);
  s.timeline.push_back({ZoneInterval{0.0, 5e-4, QubitState::Storage}});
  EXPECT_THROW(compute_idle_times(s), Error);
  s.timeline[1].push_back(ZoneInterval{6e-4, 1e-3, QubitState::Compute});
  EXPECT_THROW(compute_idle_times(s), Error);
}

TEST(IdleTimes, StorageResidentIsZero) {
  const auto c = generate({bench::Vqe{}, 4, 0});
  Circuit wide = c;
  wide.num_qubits = 5;
  const Hardware hw{P, default_geometry(5)};
  const auto r = compile(wide, hw, {RoutingMode::WithStorage, 1, 0.5, false});
  EXPECT_EQ(r.report.idle_s[4], 0.0);
}

TEST(IdleTimes, OneExcursion) {
  Circuit c{2, {CZBlock{{CZGate{0, 1}}}}, std::nullopt};
  const Hardware hw{P, default_geometry(2)};
  const auto r = compile(c, hw, {RoutingMode::WithStorage, 1, 0.5, false});
  const auto& st = r.schedule.stages.at(0);
  ASSERT_FALSE(st.chunks.empty());
  // Each qubit is out of storage from the start of the chunk that lifts it
  // until the end of the run.
  for (QubitId q = 0; q < 2; ++q) {
    double window = P.t_rydberg;
    bool lifted = false;
    for (const auto& ch : st.chunks) {
      for (const auto& cm : ch.collmoves) {
        for (const auto& m : cm.moves) {
          lifted = lifted || m.qubit == q;
        }
      }
      if (lifted) {
        window += ch.duration_s;
      }
    }
    ASSERT_TRUE(lifted);
    EXPECT_NEAR(r.report.idle_s[q], window - P.t_rydberg, 1e-15);
  }
}

TEST(IdleTimes, NonStorageIdentity) {
  const auto c = generate({bench::QaoaRegular{3}, 12, 4});
  const Hardware hw{P, default_geometry(c.num_qubits)};
  const auto r = compile(c, hw, {RoutingMode::NonStorage, 1, 0.5, false});
  std::vector<std::size_t> k(c.num_qubits, 0);
  for (const auto& g : c.blocks[0].gates) {
    ++k[g.a];
    ++k[g.b];
  }
  for (QubitId q = 0; q < c.num_qubits; ++q) {
    EXPECT_NEAR(r.report.idle_s[q], r.report.exe_time_s - P.t_rydberg * k[q], 1e-12);
  }
}

TEST(ExecutionTime, ChunkSumPlusExcitation) {
  auto s = hand_schedule(1);
  StageSchedule st;
  ParallelChunk a, b;
  a.duration_s = 215e-6;
  b.duration_s = 165e-6;
  st.chunks = {a, b};
  s.stages = {st};
  EXPECT_NEAR(execution_time(s, Circuit{}, P, false), 380.27e-6, 1e-15);
  s.stages[0].chunks = {a};
  s.stages[0].chunks[0].duration_s = 495e-6;
  EXPECT_NEAR(execution_time(s, Circuit{}, P, false), 495.27e-6, 1e-15);
  EXPECT_EQ(execution_time(hand_schedule(1), Circuit{}, P, false), 0.0);
}

TEST(Evaluate, StorageEliminatesExcitationError) {
  for (const char* family : {"qaoa-regular3", "bv", "qsim"}) {
    const auto c = generate({parse_family(family), 10, 2});
    const Hardware hw{P, default_geometry(c.num_qubits)};
    const auto ws = compile(c, hw, {RoutingMode::WithStorage, 1, 0.5, false});
    const auto ns = compile(c, hw, {RoutingMode::NonStorage, 1, 0.5, false});
    EXPECT_EQ(ws.report.f_exc, 1.0);
    EXPECT_EQ(ws.report.f_cz, ns.report.f_cz);
    if (ns.report.counters.excited_idle > 0) {
      EXPECT_LT(ns.report.f_exc, 1.0);
    }
  }
}

TEST(Evaluate, MatchesReplayOracle) {
  for (const char* family : {"qaoa-regular3", "vqe", "qft"}) {
    const auto c = generate({parse_family(family), 8, 1});
    const Hardware hw{P, default_geometry(c.num_qubits)};
    for (auto mode : {RoutingMode::WithStorage, RoutingMode::NonStorage}) {
      const auto r = compile(c, hw, {mode, 2, 0.5, false});
      const auto o = oracle::replay(r.schedule, P);
      EXPECT_EQ(o.g2, r.report.counters.gates);
      EXPECT_EQ(o.transfers, r.report.counters.transfers);
      EXPECT_EQ(o.sum_idle_excited, r.report.counters.excited_idle);
      EXPECT_TRUE(oracle::near(o.t_exe, r.report.exe_time_s, 1e-12));
      EXPECT_TRUE(oracle::near(o.total, r.report.total, 1e-12));
    }
  }
}

TEST(Evaluate, ExtraTransferLowersFidelity) {
  Circuit c;
  auto s = two_stage_schedule(c);
  const auto base = evaluate(s, c, P, false).total;
  s.stages[1].chunks.push_back(ParallelChunk{
      {make_collmove({make_move(2, Site::storage(0, 1), Site::storage(1, 2), s.hw)}, P)},
      0.0});
  s.counters.transfers += 2;
  EXPECT_LT(evaluate(s, c, P, false).total, base);
}

TEST(Evaluate, DecoherenceIsOneOnlyWithoutIdleTime) {
  for (const char* family : {"bv", "qft"}) {
    const auto c = generate({parse_family(family), 6, 3});
    const Hardware hw{P, default_geometry(c.num_qubits)};
    for (auto mode : {RoutingMode::WithStorage, RoutingMode::NonStorage}) {
      const auto r = compile(c, hw, {mode, 1, 0.5, false});
      const bool all_zero = std::all_of(r.report.idle_s.begin(), r.report.idle_s.end(),
                                        [](double t) { return t == 0.0; });
      EXPECT_EQ(r.report.f_dec == 1.0, all_zero);
    }
  }
  auto s = hand_schedule(2);
  all_storage_timeline(s);
  EXPECT_EQ(evaluate(s, Circuit{2, {}, std::nullopt}, P, false).f_dec, 1.0);
}
