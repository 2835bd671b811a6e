#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zoneroute/hardware.hpp"
#include "zoneroute/placement.hpp"
#include "zoneroute/stage_scheduler.hpp"

namespace zoneroute {

enum class Label { Static, Mobile, Undecided };

enum class MoveKind { ToStorage, FromStorage, IntraCompute, IntraStorage };

std::string to_string(MoveKind kind);

/// A single-qubit site-to-site move.
struct Move1Q {
  QubitId qubit = 0;
  Site from;
  Site to;
  Position from_pos;
  Position to_pos;
  double distance_um = 0.0;
  MoveKind kind = MoveKind::IntraCompute;

  friend bool operator==(const Move1Q&, const Move1Q&) = default;
};

/// Builds a move with positions, distance, and kind filled in from the
/// hardware geometry.
Move1Q make_move(QubitId q, const Site& from, const Site& to,
                 const Hardware& hw);

/// Moves carried together by one AOD motion.
struct CollMove {
  std::vector<Move1Q> moves;
  double max_distance_um = 0.0;
  double duration_s = 0.0;
  std::size_t n_in = 0;  ///< moves into storage
  std::size_t n_out = 0; ///< moves out of storage

  /// n_in - n_out, the intra-stage ordering key.
  long storage_balance() const {
    return static_cast<long>(n_in) - static_cast<long>(n_out);
  }

  friend bool operator==(const CollMove&, const CollMove&) = default;
};

/// Recomputes the derived fields (max distance, duration, n_in, n_out).
CollMove make_collmove(std::vector<Move1Q> moves,
                       const HardwareParams& params);

struct StageMoves {
  std::vector<Move1Q> moves;  ///< ascending qubit id
  Placement next;             ///< layout after all moves
  std::vector<std::optional<Label>> labels; ///< per qubit, if assigned
};

/// Decides the single-qubit moves that take `current` to a layout executing
/// `stage`.
///
/// 1. WithStorage: non-interacting compute qubits go straight down their
///    column to the nearest free storage site, highest y first; if that
///    column has no free site, the globally nearest free storage site.
///    NonStorage: non-interacting compute qubits that share a site are
///    relocated to the nearest free compute site (when two non-interacting
///    qubits share a site the lower id stays); lone ones stay.
/// 2. Gates, ascending by (a, b), get Static/Mobile/Undecided labels:
///    both in storage: lower id Undecided, partner Mobile following it;
///    one in storage: it is Mobile, its partner Static unless a Static
///    qubit already holds that site, else Undecided; both in compute: the
///    qubit whose site has no Static stays Static and its partner is
///    Mobile, lower id Mobile on ties, Undecided partner when both sites
///    already hold a Static. Pairs already sharing a compute site stay.
/// 3. Undecided qubits take the nearest free compute site (ties by row,
///    then column) and their Mobile partner follows.
///
/// A site is free when it is empty in `current` and not yet reserved as a
/// destination in this stage.
StageMoves plan_stage_moves(const Placement& current, const Stage& stage,
                            RoutingMode mode, const Hardware& hw);

/// True iff the relative order (with ties as a distinct state) of the two
/// moving qubits differs between start and end on the x or y axis.
bool conflicts(const Move1Q& m1, const Move1Q& m2);

/// Distance-aware first-fit grouping: moves sorted by (distance, qubit),
/// each joins the first group it has no conflict with.
std::vector<CollMove> group_moves(std::vector<Move1Q> moves,
                                  const HardwareParams& params);

enum class CapacityCheck {
  Full,       ///< compute <= 2 and storage <= 1 after the move
  StorageOnly ///< mid-stage: compute sites may hold a departing co-tenant
};

/// Applies all moves of one CollMove simultaneously. Throws StaleMove if a
/// qubit is not at its move's origin, OccupancyViolation if the result
/// breaks the selected capacity check.
Placement apply_collmove(const Placement& p, const CollMove& cm,
                         CapacityCheck check = CapacityCheck::Full);

enum class ViolationKind {
  PairNotColocated,   ///< a gate's qubits are apart or not in compute
  SiteOverCapacity,   ///< compute site with more than two qubits
  UnpairedColocation, ///< two co-located qubits that are not a stage gate
  StorageOverCapacity ///< storage site with more than one qubit
};

std::string to_string(ViolationKind kind);

struct LayoutViolation {
  ViolationKind kind;
  std::string detail;
};

/// Checks a layout at excitation time. Never throws on bad layouts.
std::vector<LayoutViolation> validate_layout(const Placement& p,
                                             const Stage& stage);

} // namespace zoneroute
