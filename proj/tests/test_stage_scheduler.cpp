#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zoneroute/benchgen.hpp"
#include "zoneroute/error.hpp"
#include "zoneroute/stage_scheduler.hpp"

using namespace zoneroute;

namespace {

CZBlock block(std::initializer_list<std::pair<QubitId, QubitId>> gates) {
  CZBlock b;
  for (const auto& [x, y] : gates) {
    b.gates.push_back(CZGate::between(x, y));
  }
  return b;
}

Stage stage(std::initializer_list<std::pair<QubitId, QubitId>> gates) {
  return Stage{block(gates).gates};
}

CZBlock random_block(std::mt19937_64& rng, std::size_t max_gates) {
  const std::size_t n = 2 + rng() % 7;
  const std::size_t want = 1 + rng() % max_gates;
  CZBlock b;
  for (std::size_t tries = 0; b.gates.size() < want && tries < 200; ++tries) {
    const QubitId x = rng() % n, y = rng() % n;
    if (x == y) {
      continue;
    }
    const auto g = CZGate::between(x, y);
    if (std::find(b.gates.begin(), b.gates.end(), g) == b.gates.end()) {
      b.gates.push_back(g);
    }
  }
  return b;
}

void expect_valid_partition(const CZBlock& b, const std::vector<Stage>& stages) {
  std::vector<CZGate> all;
  for (const auto& s : stages) {
    EXPECT_FALSE(s.gates.empty());
    std::vector<QubitId> qs;
    for (const auto& g : s.gates) {
      qs.push_back(g.a);
      qs.push_back(g.b);
      all.push_back(g);
    }
    std::sort(qs.begin(), qs.end());
    EXPECT_EQ(std::adjacent_find(qs.begin(), qs.end()), qs.end());
  }
  auto expected = b.gates;
  std::sort(all.begin(), all.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(all, expected);
}

} // namespace

TEST(PartitionBlock, Triangle) {
  const auto stages = partition_block(block({{0, 1}, {1, 2}, {0, 2}}));
  ASSERT_EQ(stages.size(), 3u);
  for (const auto& s : stages) {
    EXPECT_EQ(s.gates.size(), 1u);
  }
}

TEST(PartitionBlock, DisjointGatesShareOneStage) {
  const auto stages = partition_block(block({{0, 1}, {2, 3}}));
  ASSERT_EQ(stages.size(), 1u);
  EXPECT_EQ(stages[0].gates.size(), 2u);
}

TEST(PartitionBlock, PathColorsMiddleFirst) {
  const auto stages = partition_block(block({{0, 1}, {1, 2}, {2, 3}}));
  ASSERT_EQ(stages.size(), 2u);
  EXPECT_EQ(stages[0], stage({{1, 2}}));
  EXPECT_EQ(stages[1], stage({{0, 1}, {2, 3}}));
  EXPECT_EQ(oracle::min_stage_count(block({{0, 1}, {1, 2}, {2, 3}}).gates), 2u);
}

TEST(PartitionBlock, EmptyBlock) {
  EXPECT_TRUE(partition_block(CZBlock{}).empty());
}

TEST(PartitionBlock, RandomBlocksAgainstOracle) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const auto b = random_block(rng, 8);
    const auto stages = partition_block(b);
    expect_valid_partition(b, stages);
    EXPECT_GE(stages.size(), oracle::min_stage_count(b.gates));
    EXPECT_GE(stages.size(), oracle::max_qubit_load(b.gates));
    EXPECT_LE(stages.size(), oracle::max_conflict_degree(b.gates) + 1);
    EXPECT_EQ(partition_block(b), stages);
  }
}

TEST(Stage, InteractingQubits) {
  const auto s = stage({{3, 5}, {0, 1}});
  EXPECT_EQ(s.interacting_qubits(), (std::vector<QubitId>{0, 1, 3, 5}));
  EXPECT_TRUE(s.interacts(5));
  EXPECT_FALSE(s.interacts(2));
}

TEST(OrderStages, GreedyMetric) {
  const std::vector<Stage> in{stage({{0, 1}}), stage({{0, 1}, {2, 3}}),
                              stage({{2, 3}})};
  // Q1={0,1}, Q2={0,1,2,3}, Q3={2,3}.
  const auto out = order_stages(in, 0.5);
  EXPECT_EQ(out, in);
}

TEST(OrderStages, StartsFromSmallestStage) {
  const std::vector<Stage> in{stage({{0, 1}, {2, 3}}), stage({{4, 5}}),
                              stage({{0, 4}, {1, 5}})};
  const auto out = order_stages(in, 0.5);
  EXPECT_EQ(out[0], in[1]);
  // From {4,5}: to Q0 = 2 + 0.5*4 = 4, to Q2 = 0 + 0.5*2 = 1.
  EXPECT_EQ(out[1], in[2]);
  EXPECT_EQ(out[2], in[0]);
}

TEST(OrderStages, SingleAndIdentical) {
  const std::vector<Stage> one{stage({{0, 1}})};
  EXPECT_EQ(order_stages(one, 0.5), one);
  const std::vector<Stage> same{stage({{0, 1}, {2, 3}}), stage({{0, 2}, {1, 3}})};
  EXPECT_EQ(order_stages(same, 0.5), same);
}

TEST(OrderStages, EmptyInput) {
  try {
    order_stages({}, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
  }
}

TEST(OrderStages, IsPermutation) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto stages = partition_block(random_block(rng, 10));
    if (stages.empty()) {
      continue;
    }
    auto out = order_stages(stages, 0.3);
    const auto key = [](const Stage& a, const Stage& b) { return a.gates < b.gates; };
    std::sort(stages.begin(), stages.end(), key);
    std::sort(out.begin(), out.end(), key);
    EXPECT_EQ(out, stages);
  }
}

TEST(PlanStages, CoversEveryBlock) {
  const auto c = generate({bench::Qft{}, 6, 0});
  const auto plan = plan_stages(c, 0.5);
  ASSERT_EQ(plan.blocks.size(), c.blocks.size());
  std::size_t gates = 0;
  for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
    expect_valid_partition(c.blocks[i], plan.blocks[i]);
    for (const auto& s : plan.blocks[i]) {
      gates += s.gates.size();
    }
  }
  EXPECT_EQ(gates, gate_count(c));
  EXPECT_EQ(plan_stages(c, 0.5).blocks, plan.blocks);
}

TEST(PlanStages, EmptyBlockHasNoStages) {
  Circuit c{3, {CZBlock{}, block({{0, 1}})}, std::nullopt};
  const auto plan = plan_stages(c, 0.5);
  EXPECT_TRUE(plan.blocks[0].empty());
  EXPECT_EQ(plan.stage_count(), 1u);
}

TEST(PlanStages, RejectsAlphaOutsideUnitInterval) {
  Circuit c{2, {block({{0, 1}})}, std::nullopt};
  EXPECT_THROW(plan_stages(c, 0.0), Error);
  EXPECT_THROW(plan_stages(c, 1.0), Error);
}
