#include "zoneroute/circuit.hpp"

#include <set>

#include "zoneroute/error.hpp"

namespace zoneroute {

namespace {

std::size_t read_count(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw Error(ErrorKind::MalformedInput,
                std::string(what) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

} // namespace

Circuit circuit_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorKind::MalformedInput, "circuit must be a JSON object");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "num_qubits" && key != "blocks" && key != "num_1q_gates") {
      throw Error(ErrorKind::MalformedInput, "unknown field '" + key + "'");
    }
  }
  if (!doc.contains("num_qubits") || !doc.contains("blocks")) {
    throw Error(ErrorKind::MalformedInput,
                "circuit requires 'num_qubits' and 'blocks'");
  }

  Circuit c;
  c.num_qubits = read_count(doc["num_qubits"], "num_qubits");
  if (doc.contains("num_1q_gates")) {
    c.num_1q_gates = read_count(doc["num_1q_gates"], "num_1q_gates");
  }

  const auto& blocks = doc["blocks"];
  if (!blocks.is_array()) {
    throw Error(ErrorKind::MalformedInput, "'blocks' must be an array");
  }
  c.blocks.reserve(blocks.size());
  for (const auto& block : blocks) {
    if (!block.is_array()) {
      throw Error(ErrorKind::MalformedInput, "each block must be an array");
    }
    CZBlock out;
    out.gates.reserve(block.size());
    for (const auto& pair : block) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorKind::MalformedInput,
                    "each gate must be a two-element array");
      }
      const auto x = read_count(pair[0], "qubit index");
      const auto y = read_count(pair[1], "qubit index");
      if (x > UINT32_MAX || y > UINT32_MAX) {
        throw Error(ErrorKind::QubitOutOfRange, "qubit index too large");
      }
      out.gates.push_back(CZGate::between(static_cast<QubitId>(x),
                                          static_cast<QubitId>(y)));
    }
    c.blocks.push_back(std::move(out));
  }
  validate(c);
  return c;
}

Circuit parse_circuit(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
  return circuit_from_json(doc);
}

void validate(const Circuit& c) {
  for (std::size_t bi = 0; bi < c.blocks.size(); ++bi) {
    std::set<CZGate> seen;
    for (const auto& g : c.blocks[bi].gates) {
      if (g.a >= c.num_qubits || g.b >= c.num_qubits) {
        throw Error(ErrorKind::QubitOutOfRange,
                    "gate (" + std::to_string(g.a) + "," +
                        std::to_string(g.b) + ") in block " +
                        std::to_string(bi) + " exceeds num_qubits " +
                        std::to_string(c.num_qubits));
      }
      if (g.a == g.b) {
        throw Error(ErrorKind::SelfPair,
                    "gate on qubit " + std::to_string(g.a) + " with itself");
      }
      if (g.a > g.b) {
        throw Error(ErrorKind::MalformedInput, "gate not normalized");
      }
      if (!seen.insert(g).second) {
        throw Error(ErrorKind::DuplicateGateInBlock,
                    "gate (" + std::to_string(g.a) + "," +
                        std::to_string(g.b) + ") repeated in block " +
                        std::to_string(bi));
      }
    }
  }
}

nlohmann::ordered_json circuit_to_json(const Circuit& c) {
  nlohmann::ordered_json doc;
  doc["num_qubits"] = c.num_qubits;
  auto blocks = nlohmann::ordered_json::array();
  for (const auto& block : c.blocks) {
    auto gates = nlohmann::ordered_json::array();
    for (const auto& g : block.gates) {
      gates.push_back({g.a, g.b});
    }
    blocks.push_back(std::move(gates));
  }
  doc["blocks"] = std::move(blocks);
  if (c.num_1q_gates) {
    doc["num_1q_gates"] = *c.num_1q_gates;
  }
  return doc;
}

std::string serialize_circuit(const Circuit& c) {
  return circuit_to_json(c).dump();
}

std::size_t gate_count(const Circuit& c) {
  std::size_t n = 0;
  for (const auto& block : c.blocks) {
    n += block.gates.size();
  }
  return n;
}

} // namespace zoneroute
