#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "qzeta/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<const char*> args) {
  args.insert(args.begin(), "qzeta");
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      qzeta::cli::main_entry(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

int shell_exit(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("verify emits a JSON report") {
  const Result r = run_cli({"verify", "--identity", "theorem-2-2", "--order", "200", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["identity"] == "zeta6-triangular");
  CHECK(j["order"] == 200);
  CHECK(j["status"] == "verified");
  CHECK(j["first_mismatch"].is_null());
  CHECK(j["elapsed_ms"].is_number_integer());
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (std::vector<const char*> args :
       {std::vector<const char*>{"verify", "--identity", "gauss-psi-product", "--format", "json"},
        std::vector<const char*>{"coeffs", "--series", "phi12", "--order", "40", "--format", "json"},
        std::vector<const char*>{"limit", "--target", "psi2", "--k-min", "4", "--k-max", "7",
                                 "--format", "json"}}) {
    const Result r = run_cli(args);
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("coeffs table") {
  const Result r = run_cli({"coeffs", "--series", "psi12", "--order", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "# psi12 order=3\n0 1\n1 12\n2 66\n3 232\n");

  const Result csv = run_cli({"coeffs", "--series", "psi12", "--order", "3", "--format", "csv"});
  CHECK(csv.out == "n,coefficient\n0,1\n1,12\n2,66\n3,232\n");

  const Result eta = run_cli({"coeffs", "--series", "eta12_odd_coeffs", "--order", "2", "--format", "json"});
  const auto j = nlohmann::json::parse(eta.out);
  CHECK(j["coefficients"][1]["n"] == 3);
  CHECK(j["coefficients"][1]["value"] == "-12");
  CHECK(j["coefficients"][2]["value"] == "54");
}

TEST_CASE("big coefficients are decimal strings") {
  const Result r = run_cli({"coeffs", "--series", "s6-direct", "--order", "150", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"][150]["value"].is_string());
  // sigma5(301) = sigma5(7) sigma5(43) = 16808 * 147008444
  CHECK(j["coefficients"][150]["value"] == "2470917926752");
}

TEST_CASE("usage errors") {
  CHECK(run_cli({"verify", "--identity", "no-such-identity"}).code == qzeta::cli::kUsageError);
  CHECK(run_cli({"coeffs", "--series", "nope"}).code == qzeta::cli::kUsageError);
  CHECK(run_cli({"limit", "--target", "nope"}).code == qzeta::cli::kUsageError);
  CHECK(run_cli({"limit", "--precision", "32"}).code == qzeta::cli::kUsageError);
  CHECK(run_cli({"limit", "--k-min", "9", "--k-max", "4"}).code == qzeta::cli::kUsageError);
  CHECK(run_cli({}).code == qzeta::cli::kUsageError);
  CHECK(run_cli({"frobnicate"}).code == qzeta::cli::kUsageError);
  CHECK(run_cli({"verify", "--identity", "gauss-psi-product", "--format", "xml"}).code ==
        qzeta::cli::kUsageError);
  const Result help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("report-all") != std::string::npos);
}

TEST_CASE("unwritable output path is an I/O error") {
  const Result r = run_cli({"verify", "--identity", "gauss-psi-product", "--output",
                            "/nonexistent-dir/report.json"});
  CHECK(r.code == qzeta::cli::kIoError);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "qzeta_cli_test.csv";
  const Result r = run_cli({"verify", "--identity", "binomial-collapse", "--order", "50", "--format",
                            "csv", "--output", path.c_str()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str().rfind("identity,order,status,exponent,lhs,rhs,elapsed_ms\n"
                         "binomial-collapse,50,verified,,,,", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("non-converging limit exits 1") {
  const Result r = run_cli({"limit", "--target", "psi2", "--k-min", "2", "--k-max", "4"});
  CHECK(r.code == qzeta::cli::kCheckFailed);
  CHECK(r.err.find("FAILED: limit pi/2") != std::string::npos);
}

TEST_CASE("limit precision comes from the environment unless given") {
  setenv("QZETA_PRECISION_BITS", "192", 1);
  const Result env = run_cli({"limit", "--target", "psi2", "--k-min", "4", "--k-max", "6",
                              "--format", "json"});
  CHECK(nlohmann::json::parse(env.out)["precision_bits"] == 192);
  const Result flag = run_cli({"limit", "--target", "psi2", "--k-min", "4", "--k-max", "6",
                               "--precision", "320", "--format", "json"});
  CHECK(nlohmann::json::parse(flag.out)["precision_bits"] == 320);
  setenv("QZETA_PRECISION_BITS", "lots", 1);
  CHECK(run_cli({"limit"}).code == qzeta::cli::kUsageError);
  unsetenv("QZETA_PRECISION_BITS");
}

TEST_CASE("report-all aggregates every check") {
  const Result r = run_cli({"report-all", "--k-min", "4", "--k-max", "9", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["reports"].size() == 7);
  CHECK(j["limits"].size() == 3);
  CHECK(j["status"] == "verified");
  CHECK(j["limits"][2]["phi12_track"].size() == 6);
  CHECK(nlohmann::json::parse(r.out).dump(2) + "\n" == r.out);
}

TEST_CASE("exit codes from the real binary") {
  const std::string cli = QZETA_CLI_PATH;
  CHECK(shell_exit(cli + " verify --identity theorem-2-1 --order 50 >/dev/null") == 0);
  CHECK(shell_exit(cli + " verify --identity no-such-identity 2>/dev/null") == 2);
  CHECK(shell_exit(cli + " verify --identity lemma-3-1 -o /nonexistent-dir/x 2>/dev/null") == 3);
  CHECK(shell_exit(cli + " limit --target psi12 --k-min 1 --k-max 3 >/dev/null 2>&1") == 1);
}
