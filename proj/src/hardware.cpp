#include "zoneroute/hardware.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "zoneroute/error.hpp"

namespace zoneroute {

std::string to_string(Zone zone) {
  return zone == Zone::Compute ? "compute" : "storage";
}

std::string to_string(const Site& s) {
  return to_string(s.zone) + "(" + std::to_string(s.col) + "," +
         std::to_string(s.row) + ")";
}

ZoneLayout default_geometry(std::size_t num_qubits) {
  int side = 1;
  while (static_cast<std::size_t>(side) * side < num_qubits) {
    ++side;
  }
  return {side, side, side, 2 * side};
}

bool in_bounds(const Site& s, const ZoneLayout& layout) {
  if (s.col < 0 || s.row < 0) {
    return false;
  }
  if (s.zone == Zone::Compute) {
    return s.col < layout.compute_cols && s.row < layout.compute_rows;
  }
  return s.col < layout.storage_cols && s.row < layout.storage_rows;
}

Position physical_position(const Site& s, const ZoneLayout& layout,
                           const HardwareParams& params) {
  if (!in_bounds(s, layout)) {
    throw Error(ErrorKind::SiteOutOfBounds, to_string(s));
  }
  const double x = params.site_pitch_um * s.col;
  if (s.zone == Zone::Compute) {
    return {x, params.site_pitch_um * s.row};
  }
  return {x, -params.zone_gap_um - params.site_pitch_um * s.row};
}

double euclidean_distance(const Site& a, const Site& b,
                          const ZoneLayout& layout,
                          const HardwareParams& params) {
  const auto pa = physical_position(a, layout, params);
  const auto pb = physical_position(b, layout, params);
  return std::hypot(pa.x_um - pb.x_um, pa.y_um - pb.y_um);
}

double move_duration(double distance_um, const HardwareParams& params) {
  return std::sqrt(distance_um * 1e-6 / params.accel);
}

void validate(const HardwareParams& p) {
  auto fidelity = [](double f, const char* name) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw Error(ErrorKind::InvalidConfig,
                  std::string(name) + " must lie in (0, 1]");
    }
  };
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) {
      throw Error(ErrorKind::InvalidConfig,
                  std::string(name) + " must be positive");
    }
  };
  fidelity(p.f1, "f1");
  fidelity(p.f2, "f2");
  fidelity(p.f_exc, "f_exc");
  fidelity(p.f_trans, "f_trans");
  positive(p.t_1q, "t_1q");
  positive(p.t_rydberg, "t_rydberg");
  positive(p.t_trans, "t_trans");
  positive(p.accel, "accel");
  positive(p.t2, "t2");
  positive(p.zone_gap_um, "zone_gap_um");
  // Neighbouring sites must respect the 10 um minimum atom spacing.
  if (!(p.site_pitch_um >= 10.0)) {
    throw Error(ErrorKind::InvalidConfig, "site pitch below 10 um");
  }
}

namespace {

std::pair<int, int> read_dims(const nlohmann::json& v, const char* name) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
      !v[1].is_number_integer() || v[0].get<int>() < 1 ||
      v[1].get<int>() < 1) {
    throw Error(ErrorKind::InvalidConfig,
                std::string(name) + " must be [cols, rows] with both >= 1");
  }
  return {v[0].get<int>(), v[1].get<int>()};
}

} // namespace

Hardware hardware_from_json(const nlohmann::json& doc,
                            std::size_t num_qubits) {
  Hardware hw;
  hw.layout = default_geometry(num_qubits);
  if (doc.is_null()) {
    return hw;
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::InvalidConfig, "hardware config must be an object");
  }
  auto& p = hw.params;
  auto number = [&](const char* key, double& out, double per_unit) {
    if (!doc.contains(key)) {
      return;
    }
    if (!doc[key].is_number()) {
      throw Error(ErrorKind::InvalidConfig,
                  std::string(key) + " must be a number");
    }
    out = doc[key].get<double>() / per_unit;
  };
  for (const auto& [key, _] : doc.items()) {
    static const char* known[] = {
        "f1",          "f2",           "f_exc",      "f_trans",
        "t_1q_us",     "t_rydberg_ns", "t_trans_us", "accel_m_s2",
        "t2_s",        "site_pitch_um", "zone_gap_um", "chunk_transfers",
        "compute",     "storage"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw Error(ErrorKind::InvalidConfig, "unknown field '" + key + "'");
    }
  }
  number("f1", p.f1, 1.0);
  number("f2", p.f2, 1.0);
  number("f_exc", p.f_exc, 1.0);
  number("f_trans", p.f_trans, 1.0);
  number("t_1q_us", p.t_1q, 1e6);
  number("t_rydberg_ns", p.t_rydberg, 1e9);
  number("t_trans_us", p.t_trans, 1e6);
  number("accel_m_s2", p.accel, 1.0);
  number("t2_s", p.t2, 1.0);
  number("site_pitch_um", p.site_pitch_um, 1.0);
  number("zone_gap_um", p.zone_gap_um, 1.0);
  if (doc.contains("chunk_transfers")) {
    const auto& v = doc["chunk_transfers"];
    if (!v.is_number_integer() || v.get<int>() < 1) {
      throw Error(ErrorKind::InvalidConfig,
                  "chunk_transfers must be a positive integer");
    }
    p.chunk_transfers = v.get<unsigned>();
  }
  if (doc.contains("compute")) {
    std::tie(hw.layout.compute_cols, hw.layout.compute_rows) =
        read_dims(doc["compute"], "compute");
  }
  if (doc.contains("storage")) {
    std::tie(hw.layout.storage_cols, hw.layout.storage_rows) =
        read_dims(doc["storage"], "storage");
  }
  validate(p);
  return hw;
}

nlohmann::json hardware_to_json(const Hardware& hw) {
  const auto& p = hw.params;
  return {
      {"f1", p.f1},
      {"f2", p.f2},
      {"f_exc", p.f_exc},
      {"f_trans", p.f_trans},
      {"t_1q_us", p.t_1q * 1e6},
      {"t_rydberg_ns", p.t_rydberg * 1e9},
      {"t_trans_us", p.t_trans * 1e6},
      {"accel_m_s2", p.accel},
      {"t2_s", p.t2},
      {"site_pitch_um", p.site_pitch_um},
      {"zone_gap_um", p.zone_gap_um},
      {"chunk_transfers", p.chunk_transfers},
      {"compute", {hw.layout.compute_cols, hw.layout.compute_rows}},
      {"storage", {hw.layout.storage_cols, hw.layout.storage_rows}},
  };
}

} // namespace zoneroute
