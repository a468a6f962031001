#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dqc/analysis.hpp"

namespace dqc::cli {

enum class Command { decompose, run, montecarlo, order_search, ground_state, sweep };
enum class Format { table, csv, json };

struct RunConfig {
  Command command = Command::run;
  std::string input_path;
  enum class Mode { exact, mc } mode = Mode::exact;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  double tolerance = kDefaultTolerance;
  std::optional<std::string> output_path;
  Format format = Format::table;
  std::optional<std::vector<std::size_t>> order_override;  // run
  std::optional<SearchMethod> force_method;                // order-search
  double sweep_p = 0.9;                                    // sweep
  int sweep_m_max = 16;
};

/// Command-line misuse; message is what should reach the user. exit_code 0
/// means help was requested and `message` is the help text.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& message, int exit_code = 2)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

/// Parse a full argument vector (no program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Run a validated config; writes the report to the configured output and
/// returns 0. Domain errors propagate as dqc::Error.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + execute + error mapping: 0 ok, 1 domain error, 2 usage error.
int run_main(int argc, char** argv, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);

}  // namespace dqc::cli
