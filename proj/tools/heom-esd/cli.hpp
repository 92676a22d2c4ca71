#pragma once

// heom-esd front end: configuration parsing and the three subcommands,
// written against the C interface only.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "heomesd/heomesd.h"

namespace heomesd::cli {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitNumerical = 2, kExitIo = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepAxisSpec {
  std::string axis;  // eta | gamma | beta
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
};

struct RunConfig {
  std::string subcommand;  // evolve | sweep | converge
  heom_params params{};
  std::string initial = "bell-psi-minus";
  std::optional<SweepAxisSpec> sweep;
  std::string out;  // empty: standard output
};

/// Parses `heom-esd <subcommand> [options]` (args exclude the program name).
/// Precedence: flags, then --config file entries, then defaults. Throws
/// UsageError naming the offending key.
RunConfig parse_config(const std::vector<std::string>& args);

/// "AXIS:START:STOP:N"; throws UsageError.
SweepAxisSpec parse_sweep(const std::string& text);

/// Fixed CSV number format: 12 significant digits.
std::string format_number(double x);

/// `#`-prefixed lines listing the resolved configuration.
void write_metadata(std::ostream& out, const RunConfig& config);

/// Runs the subcommand, writing CSV to `csv` and diagnostics to `diag`.
/// Returns the process exit code.
int run(const RunConfig& config, std::ostream& csv, std::ostream& diag);

/// Whole program: parse, open the output, run.
int main_entry(const std::vector<std::string>& args, std::ostream& stdout_stream,
               std::ostream& diag);

}  // namespace heomesd::cli
