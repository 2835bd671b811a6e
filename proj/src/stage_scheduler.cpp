#include "zoneroute/stage_scheduler.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "zoneroute/error.hpp"

namespace zoneroute {

std::vector<QubitId> Stage::interacting_qubits() const {
  std::vector<QubitId> q;
  q.reserve(2 * gates.size());
  for (const auto& g : gates) {
    q.push_back(g.a);
    q.push_back(g.b);
  }
  std::sort(q.begin(), q.end());
  return q;
}

bool Stage::interacts(QubitId q) const {
  return std::any_of(gates.begin(), gates.end(),
                     [q](const CZGate& g) { return g.a == q || g.b == q; });
}

std::size_t StagePlan::stage_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    n += b.size();
  }
  return n;
}

std::vector<Stage> partition_block(const CZBlock& block) {
  const auto& gates = block.gates;
  const std::size_t n = gates.size();

  std::vector<std::vector<std::size_t>> adjacent(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& x = gates[i];
      const auto& y = gates[j];
      if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) {
        adjacent[i].push_back(j);
        adjacent[j].push_back(i);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) {
                     return adjacent[l].size() > adjacent[r].size();
                   });

  constexpr int uncolored = -1;
  std::vector<int> color(n, uncolored);
  int num_colors = 0;
  for (std::size_t v : order) {
    std::vector<bool> available(adjacent[v].size() + 1, true);
    for (std::size_t u : adjacent[v]) {
      if (color[u] != uncolored &&
          static_cast<std::size_t>(color[u]) < available.size()) {
        available[color[u]] = false;
      }
    }
    const auto c = std::find(available.begin(), available.end(), true) -
                   available.begin();
    color[v] = static_cast<int>(c);
    num_colors = std::max(num_colors, color[v] + 1);
  }

  std::vector<Stage> stages(num_colors);
  for (std::size_t i = 0; i < n; ++i) {
    stages[color[i]].gates.push_back(gates[i]);
  }
  return stages;
}

namespace {

double transition_cost(const std::vector<QubitId>& cur,
                       const std::vector<QubitId>& next, double alpha) {
  std::vector<QubitId> leaving;
  std::vector<QubitId> entering;
  std::set_difference(cur.begin(), cur.end(), next.begin(), next.end(),
                      std::back_inserter(leaving));
  std::set_difference(next.begin(), next.end(), cur.begin(), cur.end(),
                      std::back_inserter(entering));
  return static_cast<double>(leaving.size()) +
         alpha * static_cast<double>(entering.size());
}

} // namespace

std::vector<Stage> order_stages(const std::vector<Stage>& stages,
                                double alpha) {
  if (stages.empty()) {
    throw Error(ErrorKind::EmptyInput, "no stages to order");
  }
  const std::size_t n = stages.size();
  std::vector<std::vector<QubitId>> sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    sets[i] = stages[i].interacting_qubits();
  }

  std::vector<bool> used(n, false);
  std::vector<Stage> out;
  out.reserve(n);

  std::size_t cur = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (sets[i].size() < sets[cur].size()) {
      cur = i;
    }
  }
  used[cur] = true;
  out.push_back(stages[cur]);

  while (out.size() < n) {
    std::size_t best = n;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) {
        continue;
      }
      const double cost = transition_cost(sets[cur], sets[i], alpha);
      if (cost < best_cost) {
        best_cost = cost;
        best = i;
      }
    }
    cur = best;
    used[cur] = true;
    out.push_back(stages[cur]);
  }
  return out;
}

StagePlan plan_stages(const Circuit& c, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorKind::InvalidConfig, "alpha must lie in (0, 1)");
  }
  StagePlan plan;
  plan.alpha = alpha;
  plan.blocks.reserve(c.blocks.size());
  for (const auto& block : c.blocks) {
    auto stages = partition_block(block);
    plan.blocks.push_back(stages.empty() ? std::move(stages)
                                         : order_stages(stages, alpha));
  }
  return plan;
}

} // namespace zoneroute
