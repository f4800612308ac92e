#ifndef QZETA_CLI_HPP
#define QZETA_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "qzeta/genfuncs.hpp"
#include "qzeta/verifier.hpp"

namespace qzeta::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

enum class Command { verify, coeffs, limit, report_all };
enum class OutputFormat { text, json, csv };
enum class LimitTarget { psi2, psi12, s6_minus_phi12, all };

struct RunConfig {
  Command command = Command::report_all;
  std::optional<IdentityId> identity;
  std::optional<GenFnId> series;
  LimitTarget limit_target = LimitTarget::all;
  std::optional<std::size_t> order;  // per-identity default when absent
  std::optional<std::size_t> n_max;  // t12-divisor-formula only
  int k_min = 4;
  int k_max = 12;
  unsigned precision_bits = 256;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> output_path;
};

struct UsageError {
  std::string message;
};

// Parses argv into a config. --help output goes to `out` and yields
// ExitCode::kSuccess through the int alternative.
std::variant<RunConfig, UsageError, int> parse_args(int argc, const char* const* argv,
                                                    std::ostream& out);

// Runs one command. The report goes to output_path when set, else `out`;
// diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qzeta::cli

#endif
