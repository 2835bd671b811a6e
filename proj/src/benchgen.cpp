#include "zoneroute/benchgen.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "zoneroute/error.hpp"

namespace zoneroute {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform real in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

  template <typename T> void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

private:
  std::mt19937_64 engine_;
};

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) {
    throw Error(kind, what);
  }
}

void check_probability(double p, const char* what) {
  require(p > 0.0 && p <= 1.0, ErrorKind::DegenerateSpec,
          std::string(what) + " must lie in (0, 1]");
}

CZBlock regular_graph(std::size_t n, std::size_t d, Rng& rng) {
  require(d >= 1, ErrorKind::DegenerateSpec, "degree must be at least 1");
  require(d < n, ErrorKind::InfeasibleSpec,
          "degree must be smaller than the qubit count");
  require((d * n) % 2 == 0, ErrorKind::InfeasibleSpec,
          "degree * qubits must be even for a regular graph");

  std::vector<QubitId> stubs;
  stubs.reserve(n * d);
  for (std::size_t q = 0; q < n; ++q) {
    stubs.insert(stubs.end(), d, static_cast<QubitId>(q));
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    rng.shuffle(stubs);
    std::set<CZGate> edges;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1] ||
          !edges.insert(CZGate::between(stubs[i], stubs[i + 1])).second) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return CZBlock{{edges.begin(), edges.end()}};
    }
  }
  throw Error(ErrorKind::InfeasibleSpec,
              "no simple regular graph found after 1000 pairings");
}

CZBlock all_pairs(std::size_t n) {
  CZBlock block;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      block.gates.push_back(
          {static_cast<QubitId>(i), static_cast<QubitId>(j)});
    }
  }
  return block;
}

struct Emitter {
  std::size_t n;
  Rng& rng;

  std::vector<CZBlock> operator()(const bench::QaoaRegular& f) const {
    return {regular_graph(n, f.degree, rng)};
  }

  std::vector<CZBlock> operator()(const bench::QaoaRandom& f) const {
    check_probability(f.pair_probability, "pair probability");
    CZBlock block;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng.unit() < f.pair_probability) {
          block.gates.push_back(
              {static_cast<QubitId>(i), static_cast<QubitId>(j)});
        }
      }
    }
    return {std::move(block)};
  }

  std::vector<CZBlock> operator()(const bench::BernsteinVazirani&) const {
    std::vector<QubitId> positions(n - 1);
    std::iota(positions.begin(), positions.end(), QubitId{0});
    rng.shuffle(positions);
    positions.resize(n / 2);
    std::sort(positions.begin(), positions.end());
    CZBlock block;
    for (QubitId q : positions) {
      block.gates.push_back({q, static_cast<QubitId>(n - 1)});
    }
    return {std::move(block)};
  }

  std::vector<CZBlock> operator()(const bench::Vqe&) const {
    return {all_pairs(n)};
  }

  std::vector<CZBlock> operator()(const bench::QSim& f) const {
    check_probability(f.pauli_probability, "pauli probability");
    std::vector<CZBlock> blocks;
    for (std::size_t s = 0; s < f.num_strings; ++s) {
      std::vector<QubitId> support;
      // A support below two qubits has no entangling skeleton; redraw.
      while (support.size() < 2) {
        support.clear();
        for (std::size_t q = 0; q < n; ++q) {
          if (rng.unit() < f.pauli_probability) {
            support.push_back(static_cast<QubitId>(q));
          }
        }
      }
      CZBlock block;
      for (std::size_t i = 0; i + 1 < support.size(); ++i) {
        block.gates.push_back({support[i], support[i + 1]});
      }
      blocks.push_back(std::move(block));
    }
    return blocks;
  }

  std::vector<CZBlock> operator()(const bench::Qft&) const {
    std::vector<CZBlock> blocks;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CZBlock block;
      for (std::size_t j = i + 1; j < n; ++j) {
        block.gates.push_back(
            {static_cast<QubitId>(i), static_cast<QubitId>(j)});
      }
      blocks.push_back(std::move(block));
    }
    return blocks;
  }
};

double parse_real(std::string_view s, std::string_view name) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::DegenerateSpec,
                "bad parameter in benchmark name '" + std::string(name) + "'");
  }
  return v;
}

} // namespace

Circuit generate(const BenchSpec& spec) {
  require(spec.num_qubits >= 2, ErrorKind::DegenerateSpec,
          "benchmarks need at least two qubits");
  Rng rng(spec.seed);
  Circuit c;
  c.num_qubits = spec.num_qubits;
  c.blocks = std::visit(Emitter{spec.num_qubits, rng}, spec.family);
  validate(c);
  return c;
}

BenchFamily parse_family(std::string_view name) {
  constexpr std::string_view regular = "qaoa-regular";
  constexpr std::string_view random = "qaoa-random";
  constexpr std::string_view qsim = "qsim";
  if (name.starts_with(regular) && name.size() > regular.size()) {
    std::size_t d = 0;
    const auto digits = name.substr(regular.size());
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) {
      return bench::QaoaRegular{d};
    }
  }
  if (name == random) {
    return bench::QaoaRandom{};
  }
  if (name.starts_with(random) && name.size() > random.size() + 1 &&
      name[random.size()] == '-') {
    return bench::QaoaRandom{parse_real(name.substr(random.size() + 1), name)};
  }
  if (name == "bv") {
    return bench::BernsteinVazirani{};
  }
  if (name == "vqe") {
    return bench::Vqe{};
  }
  if (name == "qft") {
    return bench::Qft{};
  }
  if (name == qsim || name == "qsim-rand") {
    return bench::QSim{};
  }
  constexpr std::string_view qsim_rand = "qsim-rand-";
  if (name.starts_with(qsim_rand) && name.size() > qsim_rand.size()) {
    return bench::QSim{parse_real(name.substr(qsim_rand.size()), name), 10};
  }
  throw Error(ErrorKind::DegenerateSpec,
              "unknown benchmark family '" + std::string(name) + "'");
}

std::string family_name(const BenchFamily& family) {
  struct Namer {
    std::string operator()(const bench::QaoaRegular& f) const {
      return "qaoa-regular" + std::to_string(f.degree);
    }
    std::string operator()(const bench::QaoaRandom& f) const {
      std::ostringstream os;
      os << "qaoa-random-" << f.pair_probability;
      return os.str();
    }
    std::string operator()(const bench::BernsteinVazirani&) const {
      return "bv";
    }
    std::string operator()(const bench::Vqe&) const { return "vqe"; }
    std::string operator()(const bench::QSim& f) const {
      std::ostringstream os;
      os << "qsim-rand-" << f.pauli_probability;
      return os.str();
    }
    std::string operator()(const bench::Qft&) const { return "qft"; }
  };
  return std::visit(Namer{}, family);
}

} // namespace zoneroute
