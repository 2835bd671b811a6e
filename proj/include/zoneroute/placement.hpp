#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zoneroute/circuit.hpp"
#include "zoneroute/hardware.hpp"

namespace zoneroute {

enum class RoutingMode { WithStorage, NonStorage };

std::string to_string(RoutingMode mode);
RoutingMode parse_mode(std::string_view text);

/// Total map from qubit to site, with the inverse occupancy index kept in
/// sync. Capacity (2 per compute site, 1 per storage site) is a property of
/// layouts at rest; see check_capacity().
class Placement {
public:
  Placement() = default;
  Placement(ZoneLayout layout, std::size_t num_qubits);

  const ZoneLayout& layout() const { return layout_; }
  std::size_t num_qubits() const { return qubit_site_.size(); }

  /// Throws UnplacedQubit if q is out of range or not yet placed.
  const Site& site_of(QubitId q) const;
  bool is_placed(QubitId q) const;

  std::span<const QubitId> occupants(const Site& s) const;
  bool is_empty(const Site& s) const { return occupants(s).empty(); }

  /// Places or relocates q. Does not enforce capacity.
  void place(QubitId q, const Site& s);

  /// Sites holding more than their capacity.
  std::vector<Site> overfull_sites() const;
  /// Throws OccupancyViolation if any site is over capacity.
  void check_capacity() const;

  friend bool operator==(const Placement& a, const Placement& b) {
    return a.layout_ == b.layout_ && a.qubit_site_ == b.qubit_site_;
  }

private:
  std::size_t index(const Site& s) const;

  ZoneLayout layout_;
  std::vector<std::optional<Site>> qubit_site_;
  std::vector<std::vector<QubitId>> occupants_;
};

/// Row-major placement: qubit i at (i mod cols, i div cols) of the storage
/// zone (WithStorage) or compute zone (NonStorage).
Placement initial_layout(const Circuit& c, const ZoneLayout& layout,
                         RoutingMode mode);

} // namespace zoneroute
