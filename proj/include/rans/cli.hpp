#pragma once

// Command implementations behind the ranscli binary. Kept separate from flag
// parsing so tests can drive the exact pipeline the tool runs.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rans/codec.hpp"
#include "rans/stream.hpp"

namespace rans::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCorrupt = 2;
inline constexpr int kExitSelftestFailed = 3;

enum class Command { compress, decompress, stats, selftest };
enum class ModelChoice { static_model, adaptive };
enum class StatsFormat { human, machine };

struct CliConfig {
  Command command = Command::compress;
  std::string input_path;
  std::string output_path;  // derived from input_path when empty
  ModelChoice model = ModelChoice::static_model;
  std::optional<CodecParams> params;  // default (64, 32, 16) when absent
  StatsFormat stats_format = StatsFormat::human;
  bool inject_fault = false;  // selftest negative-control hook
};

struct CompressOutcome {
  RateReport report;
  std::uint64_t input_bytes = 0;
  std::uint64_t output_bytes = 0;  // container size on disk
  std::string output_path;
};

struct DecompressOutcome {
  std::uint64_t output_bytes = 0;
  bool end_state_ok = true;
  std::vector<std::string> warnings;
  std::string output_path;
};

struct SelftestOutcome {
  bool pass = false;
  std::uint64_t checks = 0;      // individual assertions evaluated
  std::uint64_t properties = 0;  // property groups exercised
  std::vector<std::string> failures;
};

// The byte alphabet is fixed at 256 symbols for all file commands.
CompressOutcome compress_file(const CliConfig& config);
DecompressOutcome decompress_file(const CliConfig& config);
SelftestOutcome run_selftest(bool inject_fault);

void print_report(const CompressOutcome& outcome, StatsFormat format,
                  std::ostream& out);

// Full command dispatch; returns the process exit code and reports problems
// on `err`.
int run_cli(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rans::cli
