#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "chevalley/io.hpp"
#include "chevalley/root_data.hpp"

namespace chevalley {

enum class Command { roots, pairs, quartets, constants, verify, bench };

Command parse_command(const std::string& text);

/// Classical ranks above this are refused unless --max-rank raises it.
inline constexpr int kDefaultRankCeiling = 12;

struct RunConfig {
  Command command = Command::roots;
  std::optional<Diagram> diagram;  // may be omitted for verify --matrix
  Format format = Format::md;
  std::optional<std::string> out_path;
  int reps = 21;
  bool force_general = false;
  bool with_coords = false;
  int max_rank = kDefaultRankCeiling;
  std::optional<std::string> matrix_path;
};

/// Throws std::invalid_argument when the configuration is inconsistent.
void validate(const RunConfig& config);

struct BenchResult {
  int reps = 0;
  double specialized_median_ms = 0;
  double general_median_ms = 0;
};

/// Median wall time of a full positive-constant fill under each formula mode.
BenchResult run_benchmark(const RootSystem& system, int reps);

/// Runs one command. Returns the process exit status: 0 on success, 1 when
/// verification fails, 2 on usage errors.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and executes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace chevalley
