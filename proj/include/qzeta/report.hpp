#ifndef QZETA_REPORT_HPP
#define QZETA_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "qzeta/genfuncs.hpp"
#include "qzeta/limits.hpp"
#include "qzeta/verifier.hpp"

namespace qzeta {

// Keys are emitted in sorted order; big integers and high-precision reals are
// decimal strings, so parse(dump(x)).dump() == dump(x).
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const LimitTrace& trace);

struct CoefficientRow {
  std::size_t index;
  BigInt value;
};

struct CoefficientTable {
  GenFnId series;
  std::size_t order;
  std::vector<CoefficientRow> rows;
};

// Rows (n, coefficient of q^n); for eta12_odd_coeffs the index is the odd
// argument 2n+1 of a(.).
CoefficientTable tabulate(GenFnId series, std::size_t order);
nlohmann::json to_json(const CoefficientTable& table);

std::string to_text(const VerificationReport& report);
std::string to_text(const LimitTrace& trace);
std::string to_text(const CoefficientTable& table);

std::string csv_header_reports();
std::string to_csv_row(const VerificationReport& report);
std::string csv_header_limits();
std::string to_csv_rows(const LimitTrace& trace);
std::string to_csv(const CoefficientTable& table);

} // namespace qzeta

#endif
