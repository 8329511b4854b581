#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hooleyff_cli/config.hpp"

namespace hooleyff::cli {

inline constexpr std::string_view kReportSchema = "hooley-ff/report/v1";

enum ExitCode : int { kExitPass = 0, kExitConfigError = 1, kExitCheckFailed = 2 };

struct RunOptions {
  unsigned jobs = 1;
  std::optional<std::filesystem::path> out_dir;  // --out; wins over HOOLEYFF_OUT and the config
  std::optional<std::uint64_t> seed;             // --seed
  bool gnuplot = false;
};

struct RunOutcome {
  int exit_code = kExitPass;
  std::string summary;  // the one-line summary printed by `run`
  std::filesystem::path csv;
  std::filesystem::path json;
  std::vector<std::string> warnings;
};

/// Runs a validated config and writes <name>.csv / <name>.json (and
/// <name>.gp, <name>_table.csv when requested). Domain errors propagate.
RunOutcome run_experiment(ExperimentConfig config, const RunOptions& options);

/// Loads, runs and reports. Errors become exit code 1 with the message on
/// `err`; the summary line goes to `out`.
int run_config_file(const std::filesystem::path& path, const RunOptions& options, std::ostream& out,
                    std::ostream& err);

/// Built-in families and example specs, one line each, filtered by substring
/// (an empty filter lists everything). Every mixed-character entry is
/// checked against the hypothesis validator before it is listed.
std::vector<std::string> list_catalog(std::string_view filter = {});

}  // namespace hooleyff::cli
