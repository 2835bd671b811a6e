#include "zoneroute/report.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "zoneroute/error.hpp"

namespace zoneroute {

namespace {

std::string num(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fixed(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

} // namespace

nlohmann::json report_to_json(const FidelityReport& r, const ReportMeta& m) {
  nlohmann::json doc;
  doc["circuit"] = m.circuit;
  doc["num_qubits"] = m.num_qubits;
  doc["mode"] = to_string(m.mode);
  doc["n_aods"] = m.n_aods;
  doc["alpha"] = m.alpha;
  doc["include_1q"] = m.include_1q;
  doc["f_cz"] = r.f_cz;
  doc["f_exc"] = r.f_exc;
  doc["f_trans"] = r.f_trans;
  doc["f_dec"] = r.f_dec;
  doc["f_1q"] = r.f_1q ? nlohmann::json(*r.f_1q) : nlohmann::json();
  doc["total"] = r.total;
  doc["T_exe_us"] = r.exe_time_s * 1e6;
  doc["counters"] = {{"S", r.counters.stages},
                     {"N_trans", r.counters.transfers},
                     {"sum_n_i", r.counters.excited_idle},
                     {"g2", r.counters.gates}};
  auto idle = nlohmann::json::array();
  for (double t : r.idle_s) {
    idle.push_back(t * 1e6);
  }
  doc["T_q_us"] = std::move(idle);
  if (m.compile_ms) {
    doc["T_comp_ms"] = *m.compile_ms;
  }
  return doc;
}

std::string report_csv_header() {
  return "circuit,mode,n_aods,f_cz,f_exc,f_trans,f_dec,total,T_exe_us,S,"
         "N_trans,T_comp_ms";
}

std::string report_csv_row(const nlohmann::json& r) {
  try {
    std::ostringstream os;
    os << r.at("circuit").get<std::string>() << ','
       << r.at("mode").get<std::string>() << ','
       << r.at("n_aods").get<std::size_t>() << ','
       << num(r.at("f_cz").get<double>()) << ','
       << num(r.at("f_exc").get<double>()) << ','
       << num(r.at("f_trans").get<double>()) << ','
       << num(r.at("f_dec").get<double>()) << ','
       << num(r.at("total").get<double>()) << ','
       << fixed(r.at("T_exe_us").get<double>()) << ','
       << r.at("counters").at("S").get<std::size_t>() << ','
       << r.at("counters").at("N_trans").get<std::size_t>() << ',';
    if (r.contains("T_comp_ms")) {
      os << fixed(r["T_comp_ms"].get<double>(), 3);
    }
    return os.str();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") {
    return TableFormat::Csv;
  }
  if (text == "md") {
    return TableFormat::Markdown;
  }
  if (text == "json") {
    return TableFormat::Json;
  }
  throw Error(ErrorKind::InvalidConfig,
              "unknown format '" + std::string(text) + "'");
}

namespace {

struct Row {
  std::string circuit;
  std::size_t qubits = 0;
  std::size_t n_aods = 1;
  std::optional<double> fidelity[2]; // non-storage, with-storage
  std::optional<double> exe_us[2];
  double comp_ms_sum = 0.0;
  int comp_count = 0;

  std::optional<double> comp_ms() const {
    if (comp_count == 0) {
      return std::nullopt;
    }
    return comp_ms_sum / comp_count;
  }
};

std::vector<Row> collect(const std::vector<nlohmann::json>& reports) {
  std::vector<Row> rows;
  std::map<std::tuple<std::string, std::size_t, std::size_t>, std::size_t>
      index;
  try {
    for (const auto& r : reports) {
      const auto key = std::make_tuple(r.at("circuit").get<std::string>(),
                                       r.at("num_qubits").get<std::size_t>(),
                                       r.at("n_aods").get<std::size_t>());
      auto [it, fresh] = index.try_emplace(key, rows.size());
      if (fresh) {
        Row fresh_row;
        fresh_row.circuit = std::get<0>(key);
        fresh_row.qubits = std::get<1>(key);
        fresh_row.n_aods = std::get<2>(key);
        rows.push_back(std::move(fresh_row));
      }
      Row& row = rows[it->second];
      const int slot =
          parse_mode(r.at("mode").get<std::string>()) == RoutingMode::NonStorage
              ? 0
              : 1;
      row.fidelity[slot] = r.at("total").get<double>();
      row.exe_us[slot] = r.at("T_exe_us").get<double>();
      if (r.contains("T_comp_ms")) {
        row.comp_ms_sum += r["T_comp_ms"].get<double>();
        ++row.comp_count;
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, e.what());
  }
  return rows;
}

std::string opt(const std::optional<double>& v, bool time) {
  if (!v) {
    return "";
  }
  return time ? fixed(*v) : num(*v, 4);
}

} // namespace

std::string comparison_table(const std::vector<nlohmann::json>& reports,
                             TableFormat format) {
  const auto rows = collect(reports);
  std::ostringstream os;
  if (format == TableFormat::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
      auto maybe = [](const std::optional<double>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json();
      };
      arr.push_back({{"benchmark", r.circuit},
                     {"qubits", r.qubits},
                     {"n_aods", r.n_aods},
                     {"fidelity_non_storage", maybe(r.fidelity[0])},
                     {"fidelity_with_storage", maybe(r.fidelity[1])},
                     {"T_exe_us_non_storage", maybe(r.exe_us[0])},
                     {"T_exe_us_with_storage", maybe(r.exe_us[1])},
                     {"T_comp_ms", maybe(r.comp_ms())}});
    }
    os << arr.dump(2) << '\n';
    return os.str();
  }

  const bool md = format == TableFormat::Markdown;
  const std::vector<std::string> header =
      md ? std::vector<std::string>{"Benchmark - #Qubit",
                                    "AODs",
                                    "Fidelity (non-storage)",
                                    "Fidelity (with-storage)",
                                    "T_exe us (non-storage)",
                                    "T_exe us (with-storage)",
                                    "T_comp ms"}
         : std::vector<std::string>{"benchmark",
                                    "qubits",
                                    "n_aods",
                                    "fidelity_non_storage",
                                    "fidelity_with_storage",
                                    "T_exe_us_non_storage",
                                    "T_exe_us_with_storage",
                                    "T_comp_ms"};
  auto line = [&](const std::vector<std::string>& cells) {
    if (md) {
      os << '|';
      for (const auto& c : cells) {
        os << ' ' << c << " |";
      }
    } else {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os << (i ? "," : "") << cells[i];
      }
    }
    os << '\n';
  };
  line(header);
  if (md) {
    line(std::vector<std::string>(header.size(), "---"));
  }
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    if (md) {
      cells.push_back(r.circuit + " - " + std::to_string(r.qubits));
    } else {
      cells.push_back(r.circuit);
      cells.push_back(std::to_string(r.qubits));
    }
    cells.push_back(std::to_string(r.n_aods));
    cells.push_back(opt(r.fidelity[0], false));
    cells.push_back(opt(r.fidelity[1], false));
    cells.push_back(opt(r.exe_us[0], true));
    cells.push_back(opt(r.exe_us[1], true));
    cells.push_back(r.comp_ms() ? fixed(*r.comp_ms(), 3) : "");
    line(cells);
  }
  return os.str();
}

} // namespace zoneroute
