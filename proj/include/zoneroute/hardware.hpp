#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include <json.hpp>

namespace zoneroute {

/// Physical parameters of the device. Durations are seconds, lengths are
/// micrometers, acceleration is m/s^2.
struct HardwareParams {
  double f1 = 0.9999;
  double f2 = 0.995;
  double f_exc = 0.9975;
  double f_trans = 0.999;
  double t_1q = 1e-6;
  double t_rydberg = 270e-9;
  double t_trans = 15e-6;
  double accel = 2750.0;
  double t2 = 1.5;
  double site_pitch_um = 15.0;
  double zone_gap_um = 30.0;
  /// Transfer phases charged per parallel chunk in the time model.
  unsigned chunk_transfers = 1;

  friend bool operator==(const HardwareParams&, const HardwareParams&) =
      default;
};

struct ZoneLayout {
  int compute_cols = 1;
  int compute_rows = 1;
  int storage_cols = 1;
  int storage_rows = 1;

  std::size_t compute_sites() const {
    return static_cast<std::size_t>(compute_cols) * compute_rows;
  }
  std::size_t storage_sites() const {
    return static_cast<std::size_t>(storage_cols) * storage_rows;
  }

  friend bool operator==(const ZoneLayout&, const ZoneLayout&) = default;
};

enum class Zone { Compute, Storage };

std::string to_string(Zone zone);

struct Site {
  Zone zone = Zone::Compute;
  int col = 0;
  int row = 0;

  static Site compute(int col, int row) { return {Zone::Compute, col, row}; }
  static Site storage(int col, int row) { return {Zone::Storage, col, row}; }

  friend auto operator<=>(const Site&, const Site&) = default;
};

std::string to_string(const Site& s);

struct Position {
  double x_um = 0.0;
  double y_um = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

struct Hardware {
  HardwareParams params;
  ZoneLayout layout;
};

/// Compute zone ceil(sqrt(n)) square; storage ceil(sqrt(n)) columns by
/// twice as many rows.
ZoneLayout default_geometry(std::size_t num_qubits);

bool in_bounds(const Site& s, const ZoneLayout& layout);

/// Compute (c, r) sits at (pitch*c, pitch*r). Storage lies below compute
/// row 0: (c, r) sits at (pitch*c, -gap - pitch*r).
Position physical_position(const Site& s, const ZoneLayout& layout,
                           const HardwareParams& params);

double euclidean_distance(const Site& a, const Site& b,
                          const ZoneLayout& layout,
                          const HardwareParams& params);

/// sqrt(distance / accel). This power law passes through both reference
/// points of the device table (27.5 um in 100 us, 110 um in 200 us).
double move_duration(double distance_um, const HardwareParams& params);

/// Throws InvalidConfig when a parameter is out of its physical range.
void validate(const HardwareParams& params);

/// Reads the hardware config document. Every field is optional; missing
/// fields take the defaults above and default_geometry(num_qubits).
Hardware hardware_from_json(const nlohmann::json& doc, std::size_t num_qubits);
nlohmann::json hardware_to_json(const Hardware& hw);

} // namespace zoneroute
