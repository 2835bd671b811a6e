#include "zoneroute/placement.hpp"

#include <algorithm>

#include "zoneroute/error.hpp"

namespace zoneroute {

std::string to_string(RoutingMode mode) {
  return mode == RoutingMode::WithStorage ? "with-storage" : "non-storage";
}

RoutingMode parse_mode(std::string_view text) {
  if (text == "with-storage") {
    return RoutingMode::WithStorage;
  }
  if (text == "non-storage") {
    return RoutingMode::NonStorage;
  }
  throw Error(ErrorKind::InvalidConfig,
              "unknown mode '" + std::string(text) + "'");
}

Placement::Placement(ZoneLayout layout, std::size_t num_qubits)
    : layout_(layout), qubit_site_(num_qubits),
      occupants_(layout.compute_sites() + layout.storage_sites()) {}

std::size_t Placement::index(const Site& s) const {
  if (!in_bounds(s, layout_)) {
    throw Error(ErrorKind::SiteOutOfBounds, to_string(s));
  }
  if (s.zone == Zone::Compute) {
    return static_cast<std::size_t>(s.row) * layout_.compute_cols + s.col;
  }
  return layout_.compute_sites() +
         static_cast<std::size_t>(s.row) * layout_.storage_cols + s.col;
}

bool Placement::is_placed(QubitId q) const {
  return q < qubit_site_.size() && qubit_site_[q].has_value();
}

const Site& Placement::site_of(QubitId q) const {
  if (!is_placed(q)) {
    throw Error(ErrorKind::UnplacedQubit,
                "qubit " + std::to_string(q) + " has no site");
  }
  return *qubit_site_[q];
}

std::span<const QubitId> Placement::occupants(const Site& s) const {
  return occupants_[index(s)];
}

void Placement::place(QubitId q, const Site& s) {
  if (q >= qubit_site_.size()) {
    throw Error(ErrorKind::UnplacedQubit,
                "qubit " + std::to_string(q) + " out of range");
  }
  auto& target = occupants_[index(s)];
  if (qubit_site_[q]) {
    auto& from = occupants_[index(*qubit_site_[q])];
    from.erase(std::find(from.begin(), from.end(), q));
  }
  target.insert(std::upper_bound(target.begin(), target.end(), q), q);
  qubit_site_[q] = s;
}

std::vector<Site> Placement::overfull_sites() const {
  std::vector<Site> out;
  for (int r = 0; r < layout_.compute_rows; ++r) {
    for (int c = 0; c < layout_.compute_cols; ++c) {
      if (occupants(Site::compute(c, r)).size() > 2) {
        out.push_back(Site::compute(c, r));
      }
    }
  }
  for (int r = 0; r < layout_.storage_rows; ++r) {
    for (int c = 0; c < layout_.storage_cols; ++c) {
      if (occupants(Site::storage(c, r)).size() > 1) {
        out.push_back(Site::storage(c, r));
      }
    }
  }
  return out;
}

void Placement::check_capacity() const {
  const auto bad = overfull_sites();
  if (!bad.empty()) {
    throw Error(ErrorKind::OccupancyViolation,
                to_string(bad.front()) + " holds " +
                    std::to_string(occupants(bad.front()).size()) +
                    " qubits");
  }
}

Placement initial_layout(const Circuit& c, const ZoneLayout& layout,
                         RoutingMode mode) {
  const bool storage = mode == RoutingMode::WithStorage;
  const int cols = storage ? layout.storage_cols : layout.compute_cols;
  const std::size_t capacity =
      storage ? layout.storage_sites() : layout.compute_sites();
  if (c.num_qubits > capacity) {
    throw Error(ErrorKind::InsufficientCapacity,
                std::to_string(c.num_qubits) + " qubits exceed " +
                    std::to_string(capacity) + " sites in the " +
                    (storage ? "storage" : "compute") + " zone");
  }
  Placement p(layout, c.num_qubits);
  for (std::size_t i = 0; i < c.num_qubits; ++i) {
    const int col = static_cast<int>(i % cols);
    const int row = static_cast<int>(i / cols);
    p.place(static_cast<QubitId>(i), storage ? Site::storage(col, row)
                                             : Site::compute(col, row));
  }
  return p;
}

} // namespace zoneroute
