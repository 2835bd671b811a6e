#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zoneroute {

using QubitId = std::uint32_t;

/// A CZ gate between two distinct qubits, always stored with a < b.
struct CZGate {
  QubitId a = 0;
  QubitId b = 0;

  /// Normalizing constructor. Does not reject a == b; validation does.
  static CZGate between(QubitId x, QubitId y) {
    return x < y ? CZGate{x, y} : CZGate{y, x};
  }

  friend auto operator<=>(const CZGate&, const CZGate&) = default;
};

/// A block of mutually commuting CZ gates.
struct CZBlock {
  std::vector<CZGate> gates;

  friend bool operator==(const CZBlock&, const CZBlock&) = default;
};

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<CZBlock> blocks;
  std::optional<std::size_t> num_1q_gates;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Parses and validates a circuit document. Gate pairs may be unnormalized
/// in the input; they are normalized on the way in.
Circuit parse_circuit(std::string_view text);
Circuit circuit_from_json(const nlohmann::json& doc);

/// Field order follows the schema: num_qubits, blocks, num_1q_gates.
nlohmann::ordered_json circuit_to_json(const Circuit& c);
std::string serialize_circuit(const Circuit& c);

/// Throws zoneroute::Error if any invariant is broken.
void validate(const Circuit& c);

std::size_t gate_count(const Circuit& c);

} // namespace zoneroute
