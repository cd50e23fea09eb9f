#pragma once

#include "soliton_forge/cli/report.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sforge {

enum class OutputFormat { Text, Structured };

struct RunConfig {
  /// validate, connection, curvature, axioms, soliton, fluid, theorems or report.
  std::string command;
  std::optional<std::string> input;
  RConvention r_convention = RConvention::Signed;
  /// SYM=EXPR pairs, applied to the finished report.
  std::vector<std::pair<std::string, std::string>> substitutions;
  OutputFormat format = OutputFormat::Text;
  long n = 4;
  std::optional<std::string> out_path;
};

/// Bad flags, unknown symbols, unreadable output paths.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& subcommands();

/// Splits "SYM=EXPR"; throws InputError when there is no '='.
std::pair<std::string, std::string> split_substitution(const std::string& text);

/// Builds the report for `config`, substitutions included. Throws
/// InputError, ParseError or SpecError on bad input.
Report build_report(const RunConfig& config);

/// Runs the pipeline and writes the rendered report to `out`, or to
/// config.out_path when set. Diagnostics go to `err`. Returns the exit
/// status: 0 when every counted record holds or is conditional, 1 on a hard
/// failure, 2 on input errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace sforge
