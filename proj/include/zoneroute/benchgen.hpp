#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "zoneroute/circuit.hpp"

namespace zoneroute {

namespace bench {
struct QaoaRegular { std::size_t degree = 3; };
struct QaoaRandom { double pair_probability = 0.5; };
struct BernsteinVazirani {};
struct Vqe {};
struct QSim { double pauli_probability = 0.3; std::size_t num_strings = 10; };
struct Qft {};
} // namespace bench

using BenchFamily = std::variant<bench::QaoaRegular, bench::QaoaRandom,
                                 bench::BernsteinVazirani, bench::Vqe,
                                 bench::QSim, bench::Qft>;

struct BenchSpec {
  BenchFamily family;
  std::size_t num_qubits = 0;
  std::uint64_t seed = 0;
};

/// Emits the CZ-block skeleton of a benchmark family. Deterministic for a
/// fixed spec on every platform: randomness comes from std::mt19937_64
/// seeded through one SplitMix64 step, with bounded draws done by rejection
/// sampling rather than std distributions.
Circuit generate(const BenchSpec& spec);

/// Parses names such as "qaoa-regular3", "qaoa-random", "qaoa-random-0.4",
/// "bv", "vqe", "qsim", "qsim-rand-0.3", "qft".
BenchFamily parse_family(std::string_view name);
std::string family_name(const BenchFamily& family);

} // namespace zoneroute
