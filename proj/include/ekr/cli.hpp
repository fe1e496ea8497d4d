#ifndef EKR_CLI_HPP
#define EKR_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ekr::cli {

enum class Command { stirling, enumerate, bounds, verify, sweep, find_n0 };
enum class OutputFormat { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
  Command command = Command::stirling;
  std::optional<std::size_t> n, k, t, n_min, n_max, m;
  std::size_t budget_seconds = 300;
  /// Unset means the command's default: csv (one line per permutation) for
  /// enumerate, json otherwise.
  std::optional<OutputFormat> output_format;
  std::optional<std::string> output_path;
  unsigned threads = 1;
  /// Adds elapsed_ms to theorem reports. Off by default so that identical
  /// configurations produce identical bytes.
  bool timing = false;
  bool check_uniqueness = true;
};

struct ParseOutcome {
  std::optional<RunConfig> config; // empty when the process should exit
  int exit_code = kExitOk;
};

/// Parses argv (argv[0] is the program name). `env_threads` is the value of
/// EKR_THREADS, used when --threads is absent. Help and usage errors are
/// written to `out` / `err`.
ParseOutcome parse_command_line(const std::vector<std::string> &args,
                                const char *env_threads, std::ostream &out,
                                std::ostream &err);

/// Validates the configuration, runs the command and writes its report to
/// `out` or to config.output_path. Returns 0, 2 for invalid parameters, or 3
/// when a search ran out of budget (the report is still written).
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// parse_command_line followed by run.
int main_entry(const std::vector<std::string> &args, const char *env_threads,
               std::ostream &out, std::ostream &err);

} // namespace ekr::cli

#endif // EKR_CLI_HPP
