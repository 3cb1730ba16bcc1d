#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vstokes/cli/config.hpp"
#include "vstokes/record.hpp"

namespace vstokes::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNonConvergence = 3;
inline constexpr int kExitInvariant = 4;

struct RunResult {
  int exit_code = kExitOk;
  std::vector<DiagnosticsRecord> records;
  std::vector<std::string> violations;
};

/// Runs the coupled kinetic / limit scenario and writes diagnostics.csv,
/// fields/, snapshots/ and resolved_config.json into `dir`.
RunResult run_to_directory(const ScenarioConfig& cfg, const std::filesystem::path& dir,
                           std::ostream& log);

int cmd_run(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);

/// One run per lambda_list entry under <output_dir>/lambda_<value>, then
/// convergence.csv in output_dir. The file is rewritten after every run so
/// that partial results survive a failure.
int cmd_sweep(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);

/// One row of the property table printed by cmd_verify.
struct PropertyResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<PropertyResult> verify_properties(const ScenarioConfig& cfg);
int cmd_verify(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);

/// Header of convergence.csv for the given configuration.
std::vector<std::string> convergence_header(const ScenarioConfig& cfg);

}  // namespace vstokes::cli
