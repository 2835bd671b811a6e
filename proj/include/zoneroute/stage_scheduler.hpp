#pragma once

#include <cstddef>
#include <vector>

#include "zoneroute/circuit.hpp"

namespace zoneroute {

/// CZ gates on pairwise disjoint qubits, executed by one excitation.
struct Stage {
  std::vector<CZGate> gates;

  /// Sorted union of gate endpoints.
  std::vector<QubitId> interacting_qubits() const;
  bool interacts(QubitId q) const;

  friend bool operator==(const Stage&, const Stage&) = default;
};

struct StagePlan {
  /// Ordered stages for each block, in block order.
  std::vector<std::vector<Stage>> blocks;
  double alpha = 0.5;

  std::size_t stage_count() const;
};

/// Greedy coloring of the gate conflict graph (gates adjacent when they
/// share a qubit). Vertices are colored in descending degree order, ties by
/// position in the block; each takes the smallest color unused by its
/// colored neighbours. Color classes are returned in ascending color order,
/// each keeping block order.
std::vector<Stage> partition_block(const CZBlock& block);

/// Starts from the stage with the fewest interacting qubits, then greedily
/// appends the unused stage minimizing |Qcur \ Qnext| + alpha |Qnext \ Qcur|.
/// Ties go to the lowest input index. Throws EmptyInput on an empty list.
std::vector<Stage> order_stages(const std::vector<Stage>& stages,
                                double alpha);

/// Partitions and orders every block of the circuit. Empty blocks yield no
/// stages.
StagePlan plan_stages(const Circuit& c, double alpha);

} // namespace zoneroute
