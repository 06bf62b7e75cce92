#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutbench/checkers.hpp"
#include "cutbench/graph6.hpp"

namespace cutbench::cli {

enum class OutputFormat { text, json_lines };

/// Exit codes: 0 completed with the expected/clean result, 1 completed with
/// violations or unexpected satisfiers, 2 usage or input error.
inline constexpr int kExitClean = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  int k = 2;
  int n_min = 1;
  int n_max = 0;
  /// Path, or "-" for standard input; replaces the built-in generator.
  std::optional<std::string> input;
  OutputFormat output_format = OutputFormat::text;
  int workers = 1;
  DecodePolicy on_decode_error = DecodePolicy::abort;

  // check
  std::optional<std::string> graph6;
  bool props = false;
  std::optional<std::string> checker;
  // construct
  std::string family;
  int a = 0;
  int b = 0;
  std::string emit = "graph6";
  // gen
  int n = 0;
  bool connected = false;
  int min_degree = 0;
  // verify-cycles
  PairMode mode = PairMode::vertex;
  // hunt-periphery
  int diameter = 0;
  int periphery_size = 0;

  bool all_certificates = false;
  bool timing = false;
  bool quiet = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was requested; what() holds the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// args excludes the program name. Throws UsageError or HelpRequested.
RunConfig parse_args(const std::vector<std::string>& args);

/// Runs a validated config, writing the report to `out` and diagnostics to `err`.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err, std::istream& in);

/// parse_args + execute with the exit-code contract applied to every error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace cutbench::cli
