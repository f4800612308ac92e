#include "qzeta/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qzeta/limits.hpp"
#include "qzeta/report.hpp"

namespace qzeta::cli {

namespace {

constexpr const char* kPrecisionEnv = "QZETA_PRECISION_BITS";

std::optional<LimitTarget> parse_limit_target(const std::string& name) {
  if (name == "psi2") return LimitTarget::psi2;
  if (name == "psi12") return LimitTarget::psi12;
  if (name == "s6-minus-phi12" || name == "s6_minus_phi12") return LimitTarget::s6_minus_phi12;
  if (name == "all") return LimitTarget::all;
  return std::nullopt;
}

std::vector<LimitTrace> run_limits(const RunConfig& config) {
  const auto schedule = geometric_schedule(config.k_min, config.k_max, config.precision_bits);
  const unsigned bits = config.precision_bits;
  std::vector<LimitTrace> traces;
  const LimitTarget t = config.limit_target;
  if (t == LimitTarget::psi2 || t == LimitTarget::all) {
    traces.push_back(eval_psi2_limit(schedule, bits));
  }
  if (t == LimitTarget::psi12 || t == LimitTarget::all) {
    traces.push_back(eval_psi12_limit(schedule, bits));
  }
  if (t == LimitTarget::s6_minus_phi12 || t == LimitTarget::all) {
    traces.push_back(eval_s6_minus_phi12_limit(schedule, bits));
  }
  return traces;
}

std::size_t order_for(const RunConfig& config, IdentityId id) {
  if (id == IdentityId::t12_divisor_formula && config.n_max) {
    return *config.n_max;
  }
  return config.order.value_or(default_order(id));
}

struct Emitted {
  std::string body;
  bool ok = true;
  std::vector<std::string> failures;
};

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

Emitted emit_reports(const std::vector<VerificationReport>& reports,
                     const std::vector<LimitTrace>& traces, OutputFormat format, bool wrap) {
  Emitted e;
  for (const auto& r : reports) {
    if (!r.verified()) {
      e.ok = false;
      e.failures.push_back(std::string(name_of(r.identity)));
    }
  }
  for (const auto& t : traces) {
    if (!t.converged) {
      e.ok = false;
      e.failures.push_back("limit " + t.target_name);
    }
  }

  switch (format) {
  case OutputFormat::json: {
    if (!wrap && reports.size() == 1 && traces.empty()) {
      e.body = dump(to_json(reports.front()));
      break;
    }
    if (!wrap && reports.empty() && traces.size() == 1) {
      e.body = dump(to_json(traces.front()));
      break;
    }
    nlohmann::json j;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    j["limits"] = nlohmann::json::array();
    for (const auto& t : traces) j["limits"].push_back(to_json(t));
    j["status"] = e.ok ? "verified" : "failed";
    e.body = dump(j);
    break;
  }
  case OutputFormat::csv: {
    std::ostringstream os;
    if (!reports.empty()) {
      os << csv_header_reports();
      for (const auto& r : reports) os << to_csv_row(r);
    }
    if (!traces.empty()) {
      if (!reports.empty()) os << '\n';
      os << csv_header_limits();
      for (const auto& t : traces) os << to_csv_rows(t);
    }
    e.body = os.str();
    break;
  }
  case OutputFormat::text: {
    std::ostringstream os;
    for (const auto& r : reports) os << to_text(r);
    for (const auto& t : traces) os << to_text(t);
    if (wrap) os << (e.ok ? "all checks passed\n" : "some checks FAILED\n");
    e.body = os.str();
    break;
  }
  }
  return e;
}

int write_output(const RunConfig& config, const std::string& body, std::ostream& out,
                 std::ostream& err) {
  if (!config.output_path) {
    out << body;
    out.flush();
    return kSuccess;
  }
  std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file '" << *config.output_path << "'\n";
    return kIoError;
  }
  file << body;
  file.flush();
  if (!file) {
    err << "error: failed writing '" << *config.output_path << "'\n";
    return kIoError;
  }
  return kSuccess;
}

} // namespace

std::variant<RunConfig, UsageError, int> parse_args(int argc, const char* const* argv,
                                                    std::ostream& out) {
  CLI::App app{"Exact q-series identity verifier and q -> 1 limit evaluator", "qzeta"};
  app.require_subcommand(1, 1);

  RunConfig config;
  std::string identity;
  std::string series;
  std::string target = "all";
  std::string format = "text";
  std::string output;
  std::size_t order = 0;
  std::size_t n_max = 0;
  unsigned precision = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("-o,--output", output, "write the report to this file instead of stdout");
  };
  auto add_limit_opts = [&](CLI::App* sub) {
    sub->add_option("--k-min", config.k_min, "schedule starts at q = 1 - 2^-k_min");
    sub->add_option("--k-max", config.k_max, "schedule ends at q = 1 - 2^-k_max");
    sub->add_option("--precision", precision, "working precision in bits (>= 64)");
  };

  auto* verify = app.add_subcommand("verify", "verify one identity coefficient by coefficient");
  verify->add_option("--identity", identity, "identity name")->required();
  auto* verify_order = verify->add_option("--order", order, "truncation order");
  auto* verify_nmax = verify->add_option("--n-max", n_max, "largest n for t12-divisor-formula");
  add_common(verify);

  auto* coeffs = app.add_subcommand("coeffs", "print the coefficients of a generating function");
  coeffs->add_option("--series", series, "series name")->required();
  auto* coeffs_order = coeffs->add_option("--order", order, "truncation order");
  add_common(coeffs);

  auto* limit = app.add_subcommand("limit", "evaluate q -> 1 limit traces");
  limit->add_option("--target", target, "psi2, psi12, s6-minus-phi12 or all");
  add_limit_opts(limit);
  add_common(limit);

  auto* report_all = app.add_subcommand("report-all", "run every verification and limit trace");
  auto* report_order = report_all->add_option("--order", order, "override every identity's order");
  add_limit_opts(report_all);
  add_common(report_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return static_cast<int>(kSuccess);
  } catch (const CLI::ParseError& e) {
    return UsageError{e.what()};
  }

  if (*verify) {
    config.command = Command::verify;
    config.identity = parse_identity(identity);
    if (!config.identity) {
      return UsageError{"unknown identity '" + identity + "'"};
    }
    if (verify_order->count() > 0) config.order = order;
    if (verify_nmax->count() > 0) config.n_max = n_max;
  } else if (*coeffs) {
    config.command = Command::coeffs;
    config.series = parse_genfn(series);
    if (!config.series) {
      return UsageError{"unknown series '" + series + "'"};
    }
    config.order = coeffs_order->count() > 0 ? order : std::size_t{200};
  } else if (*limit) {
    config.command = Command::limit;
    const auto t = parse_limit_target(target);
    if (!t) {
      return UsageError{"unknown limit target '" + target + "'"};
    }
    config.limit_target = *t;
  } else {
    config.command = Command::report_all;
    if (report_order->count() > 0) config.order = order;
  }

  if (format == "json") config.format = OutputFormat::json;
  if (format == "csv") config.format = OutputFormat::csv;
  if (!output.empty()) config.output_path = output;

  if (precision != 0) {
    config.precision_bits = precision;
  } else if (const char* env = std::getenv(kPrecisionEnv); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      config.precision_bits = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      return UsageError{std::string(kPrecisionEnv) + " is not a bit count: '" + env + "'"};
    }
  }
  if (config.precision_bits < 64) {
    return UsageError{"precision must be at least 64 bits"};
  }
  if (config.k_min < 1 || config.k_max < config.k_min || config.k_max > 30) {
    return UsageError{"need 1 <= k-min <= k-max <= 30"};
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Emitted emitted;
  switch (config.command) {
  case Command::verify: {
    const IdentityId id = config.identity.value();
    emitted = emit_reports({verify(id, order_for(config, id))}, {}, config.format, false);
    break;
  }
  case Command::coeffs: {
    const CoefficientTable table = tabulate(config.series.value(), config.order.value_or(200));
    switch (config.format) {
    case OutputFormat::json: emitted.body = dump(to_json(table)); break;
    case OutputFormat::csv: emitted.body = to_csv(table); break;
    case OutputFormat::text: emitted.body = to_text(table); break;
    }
    break;
  }
  case Command::limit:
    emitted = emit_reports({}, run_limits(config), config.format, false);
    break;
  case Command::report_all: {
    std::vector<VerificationReport> reports;
    for (IdentityId id : kAllIdentities) {
      reports.push_back(verify(id, order_for(config, id)));
    }
    RunConfig all_limits = config;
    all_limits.limit_target = LimitTarget::all;
    emitted = emit_reports(reports, run_limits(all_limits), config.format, true);
    break;
  }
  }

  if (const int io = write_output(config, emitted.body, out, err); io != kSuccess) {
    return io;
  }
  if (!emitted.ok) {
    for (const auto& f : emitted.failures) {
      err << "FAILED: " << f << '\n';
    }
    return kCheckFailed;
  }
  return kSuccess;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(argc, argv, out);
  if (const auto* code = std::get_if<int>(&parsed)) {
    return *code;
  }
  if (const auto* usage = std::get_if<UsageError>(&parsed)) {
    err << "usage error: " << usage->message << "\nrun 'qzeta --help' for usage\n";
    return kUsageError;
  }
  try {
    return run(std::get<RunConfig>(parsed), out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

} // namespace qzeta::cli
