#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zoneroute/benchgen.hpp"
#include "zoneroute/error.hpp"
#include "zoneroute/pipeline.hpp"
#include "zoneroute/report.hpp"
#include "zoneroute/schedule_io.hpp"

namespace zoneroute::cli {

namespace fs = std::filesystem;

namespace {

enum Exit { Ok = 0, IoFailure = 1, InputError = 2, VerifyFailure = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) {
    throw IoError("cannot write " + path.string());
  }
}

nlohmann::json read_json(const fs::path& path) {
  const auto text = read_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, path.string() + ": " + e.what());
  }
}

struct CompileArgs {
  std::string input;
  std::string mode = "with-storage";
  std::size_t n_aods = 1;
  double alpha = 0.5;
  std::string hw_path;
  bool include_1q = false;
  bool no_timing = false;
  std::string schedule_out;
  std::string report_out;
  std::string format;
};

struct CompiledFile {
  std::string name;
  std::string schedule_text;
  nlohmann::json report;
};

CompiledFile compile_file(const fs::path& path, const CompileArgs& args) {
  const auto circuit = parse_circuit(read_file(path));
  nlohmann::json hw_doc;
  if (!args.hw_path.empty()) {
    hw_doc = read_json(args.hw_path);
  }
  const auto hw = hardware_from_json(hw_doc, circuit.num_qubits);

  CompileOptions options;
  options.mode = parse_mode(args.mode);
  options.n_aods = args.n_aods;
  options.alpha = args.alpha;
  options.include_1q = args.include_1q;
  const auto result = compile(circuit, hw, options);

  ReportMeta meta;
  meta.circuit = path.stem().string();
  meta.num_qubits = circuit.num_qubits;
  meta.mode = options.mode;
  meta.n_aods = options.n_aods;
  meta.alpha = options.alpha;
  meta.include_1q = options.include_1q;
  if (!args.no_timing) {
    meta.compile_ms = result.compile_ms;
  }
  return {meta.circuit, schedule_to_json(result.schedule).dump(2) + "\n",
          report_to_json(result.report, meta)};
}

std::string summary(const CompiledFile& f) {
  const auto& r = f.report;
  std::ostringstream os;
  os << f.name << " [" << r["mode"].get<std::string>() << ", "
     << r["n_aods"].get<std::size_t>() << " AOD]: fidelity "
     << r["total"].get<double>() << " (cz " << r["f_cz"].get<double>()
     << ", exc " << r["f_exc"].get<double>() << ", trans "
     << r["f_trans"].get<double>() << ", dec " << r["f_dec"].get<double>()
     << "), T_exe " << r["T_exe_us"].get<double>() << " us, "
     << r["counters"]["S"].get<std::size_t>() << " stages";
  if (r.contains("T_comp_ms")) {
    os << ", T_comp " << r["T_comp_ms"].get<double>() << " ms";
  }
  return os.str();
}

int cmd_compile(const CompileArgs& args, std::ostream& out) {
  const fs::path input(args.input);
  const bool batch = fs::is_directory(input);
  std::vector<fs::path> files;
  if (batch) {
    for (const auto& entry : fs::directory_iterator(input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& dir : {args.schedule_out, args.report_out}) {
      if (!dir.empty()) {
        fs::create_directories(dir);
      }
    }
    if (files.empty()) {
      throw Error(ErrorKind::EmptyInput, "no .json circuits in " + input.string());
    }
  } else {
    files.push_back(input);
  }

  // Independent pipelines, one per circuit.
  std::vector<std::future<CompiledFile>> jobs;
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async,
                              [&args, f] { return compile_file(f, args); }));
  }
  std::vector<CompiledFile> done;
  for (auto& j : jobs) {
    done.push_back(j.get());
  }

  // --format picks the report file encoding when --report is given,
  // otherwise what goes to stdout in place of the summary lines.
  const bool to_file = !args.report_out.empty();
  const std::string format = args.format.empty() && to_file ? "json"
                                                            : args.format;
  std::vector<nlohmann::json> reports;
  for (const auto& c : done) {
    reports.push_back(c.report);
  }
  const auto render = [&](const std::vector<nlohmann::json>& rs) {
    std::string text;
    if (format == "csv") {
      text = report_csv_header() + "\n";
      for (const auto& r : rs) {
        text += report_csv_row(r) + "\n";
      }
    } else if (format == "md") {
      text = comparison_table(rs, TableFormat::Markdown);
    } else if (rs.size() == 1) {
      text = rs.front().dump(2) + "\n";
    } else {
      text = nlohmann::json(rs).dump(2) + "\n";
    }
    return text;
  };

  for (const auto& c : done) {
    if (!args.schedule_out.empty()) {
      write_file(batch ? fs::path(args.schedule_out) /
                             (c.name + ".schedule.json")
                       : fs::path(args.schedule_out),
                 c.schedule_text);
    }
    if (to_file && batch) {
      const auto ext = format == "json" ? ".report.json"
                       : format == "csv" ? ".report.csv"
                                         : ".report.md";
      write_file(fs::path(args.report_out) / (c.name + ext), render({c.report}));
    }
  }
  if (to_file && !batch) {
    write_file(args.report_out, render(reports));
  }
  if (to_file || format.empty()) {
    for (const auto& c : done) {
      out << summary(c) << '\n';
    }
  } else {
    out << render(reports);
  }
  return Ok;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Compiler for zoned neutral-atom quantum computers"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Generate a benchmark circuit");
  std::string bench_name;
  std::size_t qubits = 0;
  std::uint64_t seed = 0;
  std::string gen_out;
  gen->add_option("--bench", bench_name,
                  "qaoa-regular<d>, qaoa-random[-p], bv, vqe, "
                  "qsim[-rand-p], qft")
      ->required();
  gen->add_option("--qubits", qubits, "Number of qubits")->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o", gen_out, "Output circuit JSON (default stdout)");

  auto* comp = app.add_subcommand("compile", "Compile a circuit");
  CompileArgs cargs;
  comp->add_option("circuit", cargs.input, "Circuit JSON or a directory")
      ->required();
  comp->add_option("--mode", cargs.mode)
      ->check(CLI::IsMember({"with-storage", "non-storage"}));
  comp->add_option("--aods", cargs.n_aods, "Number of AODs")
      ->check(CLI::PositiveNumber);
  comp->add_option("--alpha", cargs.alpha, "Stage ordering weight in (0,1)");
  comp->add_option("--hw", cargs.hw_path, "Hardware config JSON");
  comp->add_flag("--include-1q", cargs.include_1q,
                 "Include single-qubit layers in fidelity and time");
  comp->add_flag("--no-timing", cargs.no_timing,
                 "Leave T_comp out of the report (byte-reproducible)");
  comp->add_option("-o,--schedule", cargs.schedule_out, "Schedule JSON");
  comp->add_option("--report", cargs.report_out, "Report file");
  comp->add_option("--format", cargs.format,
                   "Report encoding (file if --report, else stdout)")
      ->check(CLI::IsMember({"csv", "md", "json"}));

  auto* ver = app.add_subcommand("verify", "Replay and check a schedule");
  std::string schedule_path;
  ver->add_option("schedule", schedule_path)->required();

  auto* rep = app.add_subcommand("report", "Tabulate report files");
  std::vector<std::string> report_paths;
  std::string report_format = "csv";
  std::string report_out;
  rep->add_option("reports", report_paths)->expected(0, -1);
  rep->add_option("--format", report_format)
      ->check(CLI::IsMember({"csv", "md", "json"}));
  rep->add_option("-o", report_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? Ok : InputError;
  }

  try {
    if (*gen) {
      const BenchSpec spec{parse_family(bench_name), qubits, seed};
      const auto c = generate(spec);
      const auto text = serialize_circuit(c) + "\n";
      if (gen_out.empty()) {
        out << text;
      } else {
        write_file(gen_out, text);
      }
      (gen_out.empty() ? err : out)
          << family_name(spec.family) << ": " << c.num_qubits << " qubits, "
          << c.blocks.size() << " blocks, " << gate_count(c) << " gates\n";
      return Ok;
    }
    if (*comp) {
      return cmd_compile(cargs, out);
    }
    if (*ver) {
      const auto s = schedule_from_json(read_json(schedule_path));
      const auto violations = verify_schedule(s);
      if (violations.empty()) {
        out << "ok: " << s.stages.size() << " stages verified\n";
        return Ok;
      }
      for (const auto& v : violations) {
        out << v.kind << ": " << v.detail << '\n';
      }
      err << violations.size() << " violation(s)\n";
      return VerifyFailure;
    }
    if (*rep) {
      std::vector<nlohmann::json> reports;
      for (const auto& p : report_paths) {
        reports.push_back(read_json(p));
      }
      const auto table =
          comparison_table(reports, parse_table_format(report_format));
      if (report_out.empty()) {
        out << table;
      } else {
        write_file(report_out, table);
      }
      return Ok;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return IoFailure;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return IoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return InputError;
  }
  return InputError;
}

} // namespace zoneroute::cli
