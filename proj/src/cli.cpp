#include "chevalley/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"

#include "chevalley/constants.hpp"
#include "chevalley/pairs.hpp"
#include "chevalley/quartets.hpp"
#include "chevalley/verify.hpp"

namespace chevalley {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2;
}

double time_fill_ms(const RootSystem& sys, FormulaMode mode) {
  ConstantsEngine engine(sys, mode);
  const auto start = std::chrono::steady_clock::now();
  engine.compute_all();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.out_path);
  if (!file) throw std::invalid_argument("cannot open " + *cfg.out_path + " for writing");
  file << text;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  VerificationReport report;
  std::optional<RootSystem> sys;
  if (cfg.matrix_path) {
    std::ifstream in(*cfg.matrix_path);
    if (!in) throw std::invalid_argument("cannot open " + *cfg.matrix_path);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("cannot parse matrix file: ") + e.what());
    }
    auto imported = matrix_from_json(doc);
    if (cfg.diagram && !(*cfg.diagram == imported.system.diagram())) {
      throw std::invalid_argument("matrix file is for " + imported.system.diagram().name() + ", not " +
                                  cfg.diagram->name());
    }
    sys.emplace(std::move(imported.system));
    report = verify_matrix(*sys, imported.matrix);
  } else {
    sys.emplace(build_root_system(*cfg.diagram));
    const auto mode = cfg.force_general ? FormulaMode::general : FormulaMode::specialized;
    const ConstantMatrix m = compute_all_positive(*sys, mode);
    report = verify_matrix(*sys, m);
    const auto kind = sys->diagram().kind;
    if (kind != DiagramKind::F && kind != DiagramKind::G) report.append(cross_check_formulas(*sys));
  }
  write_output(cfg, cfg.format == Format::json ? report_to_json(*sys, report).dump(2) + "\n" : report_summary(*sys, report),
               out);
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

int run_bench(const RunConfig& cfg, std::ostream& out) {
  const RootSystem sys = build_root_system(*cfg.diagram);
  const BenchResult r = run_benchmark(sys, cfg.reps);
  const double ratio = r.general_median_ms > 0 ? r.specialized_median_ms / r.general_median_ms : 0.0;
  std::ostringstream os;
  if (cfg.format == Format::json) {
    Json doc = {{"diagram", sys.diagram().name()},
                {"reps", r.reps},
                {"timing", {{"specialized_median_ms", r.specialized_median_ms},
                            {"general_median_ms", r.general_median_ms},
                            {"ratio", ratio}}}};
    os << doc.dump(2) << '\n';
  } else {
    os << sys.diagram().name() << " over " << r.reps << " repetitions\n"
       << "specialized median: " << r.specialized_median_ms << " ms\n"
       << "general median:     " << r.general_median_ms << " ms\n"
       << "ratio:              " << ratio << '\n';
  }
  write_output(cfg, os.str(), out);
  return kExitOk;
}

} // namespace

Command parse_command(const std::string& text) {
  if (text == "roots") return Command::roots;
  if (text == "pairs") return Command::pairs;
  if (text == "quartets") return Command::quartets;
  if (text == "constants") return Command::constants;
  if (text == "verify") return Command::verify;
  if (text == "bench") return Command::bench;
  throw std::invalid_argument("unknown command '" + text + "'");
}

void validate(const RunConfig& cfg) {
  if (!cfg.diagram && !(cfg.command == Command::verify && cfg.matrix_path)) {
    throw std::invalid_argument("--diagram and --rank are required");
  }
  if (cfg.matrix_path && cfg.command != Command::verify) {
    throw std::invalid_argument("--matrix is only accepted by verify");
  }
  if (cfg.reps < 1) throw std::invalid_argument("--reps must be at least 1");
  if (cfg.diagram) {
    validate(*cfg.diagram);
    const auto kind = cfg.diagram->kind;
    const bool classical = kind == DiagramKind::A || kind == DiagramKind::B || kind == DiagramKind::C ||
                           kind == DiagramKind::D;
    if (classical && cfg.diagram->rank > cfg.max_rank) {
      throw std::invalid_argument("rank " + std::to_string(cfg.diagram->rank) + " exceeds the ceiling " +
                                  std::to_string(cfg.max_rank) + " (raise it with --max-rank)");
    }
  }
}

BenchResult run_benchmark(const RootSystem& sys, int reps) {
  std::vector<double> specialized;
  std::vector<double> general;
  // Warm-up outside the measurement, then alternate to share any drift.
  time_fill_ms(sys, FormulaMode::specialized);
  time_fill_ms(sys, FormulaMode::general);
  for (int k = 0; k < reps; ++k) {
    specialized.push_back(time_fill_ms(sys, FormulaMode::specialized));
    general.push_back(time_fill_ms(sys, FormulaMode::general));
  }
  return {reps, median(specialized), median(general)};
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    switch (cfg.command) {
    case Command::roots: {
      const auto sys = build_root_system(*cfg.diagram);
      write_output(cfg, emit_roots(sys, cfg.format), out);
      return kExitOk;
    }
    case Command::pairs: {
      const auto sys = build_root_system(*cfg.diagram);
      const auto dict = build_sum_dictionary(sys);
      const ExtraspecialAssignment seeds(sys, dict);
      write_output(cfg, emit_pairs(sys, dict, seeds, cfg.format), out);
      return kExitOk;
    }
    case Command::quartets: {
      const auto sys = build_root_system(*cfg.diagram);
      write_output(cfg, emit_quartets(sys, cfg.format, cfg.with_coords), out);
      return kExitOk;
    }
    case Command::constants: {
      const auto sys = build_root_system(*cfg.diagram);
      const auto m = compute_all_positive(sys, cfg.force_general ? FormulaMode::general : FormulaMode::specialized);
      write_output(cfg, emit_constants(sys, m, cfg.format), out);
      return kExitOk;
    }
    case Command::verify:
      return run_verify(cfg, out);
    case Command::bench:
      return run_bench(cfg, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chevalley basis structure constants: root systems, extraspecial pairs, quartets, verification"};
  std::string command;
  std::string kind;
  int rank = 0;
  std::string format = "md";
  RunConfig cfg;
  std::string out_path;
  std::string matrix_path;

  app.add_option("command", command, "roots | pairs | quartets | constants | verify | bench")
      ->required()
      ->check(CLI::IsMember({"roots", "pairs", "quartets", "constants", "verify", "bench"}));
  app.add_option("--diagram,-d", kind, "Diagram kind A-G")->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  app.add_option("--rank,-n", rank, "Rank");
  app.add_option("--format,-f", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->envname("CHEVALLEY_FORMAT");
  app.add_option("--out,-o", out_path, "Write output to PATH instead of standard output");
  app.add_option("--reps", cfg.reps, "Benchmark repetitions")->check(CLI::PositiveNumber);
  app.add_flag("--force-general", cfg.force_general, "Use the length-weighted formula for every diagram");
  app.add_flag("--coords", cfg.with_coords, "Include root coordinates in quartet tables");
  app.add_option("--max-rank", cfg.max_rank, "Rank ceiling for A-D");
  app.add_option("--matrix", matrix_path, "verify: check a matrix exported by 'constants --format json'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.command = parse_command(command);
    cfg.format = parse_format(format);
    if (!kind.empty() || rank != 0) {
      if (kind.empty() || rank == 0) throw std::invalid_argument("--diagram and --rank must be given together");
      cfg.diagram = Diagram{kind_from_char(kind[0]), rank};
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!out_path.empty()) cfg.out_path = out_path;
  if (!matrix_path.empty()) cfg.matrix_path = matrix_path;
  return execute(cfg, out, err);
}

} // namespace chevalley
