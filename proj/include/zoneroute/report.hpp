#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zoneroute/fidelity.hpp"
#include "zoneroute/placement.hpp"

namespace zoneroute {

struct ReportMeta {
  std::string circuit;
  std::size_t num_qubits = 0;
  RoutingMode mode = RoutingMode::WithStorage;
  std::size_t n_aods = 1;
  double alpha = 0.5;
  bool include_1q = false;
  std::optional<double> compile_ms; ///< omitted for reproducible output
};

nlohmann::json report_to_json(const FidelityReport& r, const ReportMeta& m);

/// "circuit,mode,n_aods,f_cz,f_exc,f_trans,f_dec,total,T_exe_us,S,N_trans,T_comp_ms"
std::string report_csv_header();
std::string report_csv_row(const nlohmann::json& report);

enum class TableFormat { Csv, Markdown, Json };

TableFormat parse_table_format(std::string_view text);

/// Benchmark table with one row per (circuit, qubits, AODs) and the two
/// routing modes side by side. T_comp is the mean over the modes present.
std::string comparison_table(const std::vector<nlohmann::json>& reports,
                             TableFormat format);

} // namespace zoneroute
