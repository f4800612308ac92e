#include "qzeta/report.hpp"

#include <sstream>

namespace qzeta {

namespace {

const char* status_name(Status s) { return s == Status::verified ? "verified" : "mismatch"; }

} // namespace

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["identity"] = std::string(name_of(report.identity));
  j["order"] = report.order;
  j["status"] = status_name(report.status);
  if (report.first_mismatch) {
    j["first_mismatch"] = {{"exponent", report.first_mismatch->exponent},
                           {"lhs", to_decimal(report.first_mismatch->lhs)},
                           {"rhs", to_decimal(report.first_mismatch->rhs)}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["elapsed_ms"] = report.elapsed.count();
  return j;
}

nlohmann::json to_json(const LimitTrace& trace) {
  nlohmann::json j;
  j["target_name"] = trace.target_name;
  j["target"] = trace.target.str();
  j["precision_bits"] = trace.precision_bits;
  j["converged"] = trace.converged;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : trace.entries) {
    entries.push_back({{"q", e.q.str()}, {"value", e.value.str()}, {"rel_error", e.rel_error.str()}});
  }
  j["entries"] = std::move(entries);
  if (!trace.vanishing_track.empty()) {
    nlohmann::json track = nlohmann::json::array();
    for (const auto& e : trace.vanishing_track) {
      track.push_back({{"q", e.q.str()}, {"value", e.value.str()}});
    }
    j["phi12_track"] = std::move(track);
  }
  return j;
}

CoefficientTable tabulate(GenFnId series, std::size_t order) {
  const QSeries s = build(series, order);
  CoefficientTable table{series, order, {}};
  const bool odd_index = series == GenFnId::eta12_odd_coeffs;
  for (std::size_t n = 0; n <= order; ++n) {
    table.rows.push_back({odd_index ? 2 * n + 1 : n, s[n]});
  }
  return table;
}

nlohmann::json to_json(const CoefficientTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"n", r.index}, {"value", to_decimal(r.value)}});
  }
  return {{"series", std::string(name_of(table.series))},
          {"order", table.order},
          {"coefficients", std::move(rows)}};
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << name_of(report.identity) << " order=" << report.order << ' ' << status_name(report.status);
  if (report.first_mismatch) {
    os << " at exponent " << report.first_mismatch->exponent
       << ": lhs=" << to_decimal(report.first_mismatch->lhs)
       << " rhs=" << to_decimal(report.first_mismatch->rhs);
  }
  os << " (" << report.elapsed.count() << " ms)\n";
  return os.str();
}

std::string to_text(const LimitTrace& trace) {
  std::ostringstream os;
  os << "target " << trace.target_name << " = " << trace.target.str(30) << " ("
     << trace.precision_bits << " bits)\n";
  for (std::size_t i = 0; i < trace.entries.size(); ++i) {
    const auto& e = trace.entries[i];
    os << "  q=" << e.q.str(20) << "  value=" << e.value.str(30)
       << "  rel_error=" << e.rel_error.str(6);
    if (i < trace.vanishing_track.size()) {
      os << "  (1-q)^6 phi^12=" << trace.vanishing_track[i].value.str(6);
    }
    os << '\n';
  }
  os << "  " << (trace.converged ? "converged" : "not converged") << '\n';
  return os.str();
}

std::string to_text(const CoefficientTable& table) {
  std::ostringstream os;
  os << "# " << name_of(table.series) << " order=" << table.order << '\n';
  for (const auto& r : table.rows) {
    os << r.index << ' ' << to_decimal(r.value) << '\n';
  }
  return os.str();
}

std::string csv_header_reports() { return "identity,order,status,exponent,lhs,rhs,elapsed_ms\n"; }

std::string to_csv_row(const VerificationReport& report) {
  std::ostringstream os;
  os << name_of(report.identity) << ',' << report.order << ',' << status_name(report.status) << ',';
  if (report.first_mismatch) {
    os << report.first_mismatch->exponent << ',' << to_decimal(report.first_mismatch->lhs) << ','
       << to_decimal(report.first_mismatch->rhs);
  } else {
    os << ",,";
  }
  os << ',' << report.elapsed.count() << '\n';
  return os.str();
}

std::string csv_header_limits() { return "target,q,value,abs_error,rel_error\n"; }

std::string to_csv_rows(const LimitTrace& trace) {
  std::ostringstream os;
  for (const auto& e : trace.entries) {
    os << trace.target_name << ',' << e.q.str() << ',' << e.value.str() << ',' << e.abs_error.str()
       << ',' << e.rel_error.str() << '\n';
  }
  return os.str();
}

std::string to_csv(const CoefficientTable& table) {
  std::ostringstream os;
  os << "n,coefficient\n";
  for (const auto& r : table.rows) {
    os << r.index << ',' << to_decimal(r.value) << '\n';
  }
  return os.str();
}

} // namespace qzeta
