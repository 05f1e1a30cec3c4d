#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace padic::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kPrecisionExhausted = 2 };

// Settings shared by every subcommand: defaults, then the config file
// (--config, or PADIC_CCR_CONFIG when set), then command-line flags.
struct RunConfig {
  std::int64_t p = 5;
  std::int64_t precision = 20;
  std::int64_t m = 16;
  std::optional<std::int64_t> kappa0;
  std::int64_t level = 4;
  std::optional<std::int64_t> regulator;
  std::string output = "json";
  std::optional<std::uint64_t> seed;
};

// Runs one command line (without the program name). Reports go to out,
// diagnostics "error[<kind>]: ..." to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic::cli
