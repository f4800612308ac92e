#include "qzeta/genfuncs.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

#include "qzeta/arithfuncs.hpp"

namespace qzeta {

namespace {

constexpr std::array<std::pair<GenFnId, std::string_view>, 10> kGenFnNames = {{
    {GenFnId::psi, "psi"},
    {GenFnId::phi, "phi"},
    {GenFnId::psi8, "psi8"},
    {GenFnId::psi12, "psi12"},
    {GenFnId::phi12, "phi12"},
    {GenFnId::s4_lhs, "s4-lhs"},
    {GenFnId::s6_direct, "s6-direct"},
    {GenFnId::s6_partial_fractions, "s6-partial-fractions"},
    {GenFnId::sigma5_odd_gf, "sigma5-odd-gf"},
    {GenFnId::eta12_odd_coeffs, "eta12-odd-coeffs"},
}};

std::string normalize(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// p(q^m) for an integer polynomial p, lowest degree first.
template <std::size_t N>
QSeries poly_at_power(const std::array<long, N>& p, std::size_t m, std::size_t order) {
  std::vector<BigInt> c(order + 1);
  for (std::size_t d = 0; d < N && d * m <= order; ++d) {
    c[d * m] = p[d];
  }
  return {std::move(c), order};
}

// sum over k >= 0 with lead(k) <= order of q^lead(k) * term(k, order - lead(k)).
// The smallest exponent contributed by term k is lead(k), so the cutoff is exact.
template <typename Lead, typename Term>
QSeries lambert_sum(std::size_t order, Lead lead, Term term) {
  QSeries acc = QSeries::zero(order);
  for (std::size_t k = 0; lead(k) <= order; ++k) {
    const std::size_t l = lead(k);
    acc = add(acc, shift(term(k, order - l), l));
  }
  return acc;
}

} // namespace

std::string_view name_of(GenFnId id) {
  for (const auto& [key, name] : kGenFnNames) {
    if (key == id) {
      return name;
    }
  }
  throw std::logic_error("unknown GenFnId");
}

std::optional<GenFnId> parse_genfn(std::string_view name) {
  const std::string n = normalize(name);
  for (const auto& [key, canonical] : kGenFnNames) {
    if (n == canonical) {
      return key;
    }
  }
  return std::nullopt;
}

QSeries build(GenFnId id, std::size_t order) {
  switch (id) {
  case GenFnId::psi:
    return psi_product(order);
  case GenFnId::phi:
    return phi_product(order);
  case GenFnId::psi8:
    return psi8(order);
  case GenFnId::psi12:
    return psi12(order);
  case GenFnId::phi12:
  case GenFnId::eta12_odd_coeffs:
    return phi12(order);
  case GenFnId::s4_lhs:
    return S4_lhs(order);
  case GenFnId::s6_direct:
    return S6_direct(order);
  case GenFnId::s6_partial_fractions:
    return S6_partial_fractions(order);
  case GenFnId::sigma5_odd_gf:
    return sigma5_odd_gf(order);
  }
  throw std::logic_error("unknown GenFnId");
}

QSeries psi_theta(std::size_t order) {
  std::vector<BigInt> c(order + 1);
  for (std::size_t n = 0, t = 0; t <= order; ++n, t += n) {
    c[t] = 1;
  }
  return {std::move(c), order};
}

QSeries psi_product(std::size_t order) {
  const std::array<ProductFactor, 2> factors = {{
      {.first = 2, .step = 2, .sign = -1, .power = 1},
      {.first = 1, .step = 2, .sign = -1, .power = -1},
  }};
  return product_form(factors, order);
}

QSeries phi_product(std::size_t order) {
  const std::array<ProductFactor, 1> factors = {{{.first = 1, .step = 1, .sign = -1, .power = 1}}};
  return product_form(factors, order);
}

QSeries psi8(std::size_t order) { return pow(psi_product(order), 8); }

QSeries psi12(std::size_t order) { return pow(psi_product(order), 12); }

QSeries phi12(std::size_t order) { return pow(phi_product(order), 12); }

BigInt eta12_odd_coeff(std::uint64_t odd_index, const QSeries& phi12_series) {
  if (odd_index % 2 == 0) {
    throw std::invalid_argument("eta12_odd_coeff: index must be odd");
  }
  const std::uint64_t m = (odd_index - 1) / 2;
  if (m > phi12_series.order()) {
    throw std::out_of_range("eta12_odd_coeff: phi^12 series too short for a(" +
                            std::to_string(odd_index) + ")");
  }
  return phi12_series[m];
}

BigInt eta12_odd_coeff(std::uint64_t odd_index) {
  if (odd_index % 2 == 0) {
    throw std::invalid_argument("eta12_odd_coeff: index must be odd");
  }
  return eta12_odd_coeff(odd_index, phi12((odd_index - 1) / 2));
}

QSeries S4_lhs(std::size_t order) {
  return lambert_sum(
      order, [](std::size_t k) { return 2 * k; },
      [](std::size_t k, std::size_t n) {
        const std::size_t m = 2 * k + 1;
        return mul(poly_at_power(kP2, m, n), geom_pow(m, 4, n));
      });
}

QSeries S6_direct(std::size_t order) {
  return lambert_sum(
      order, [](std::size_t k) { return k; },
      [](std::size_t k, std::size_t n) {
        const std::size_t m = 2 * k + 1;
        return mul(poly_at_power(kOnePlusXTimesP4, m, n), geom_pow(m, 6, n));
      });
}

QSeries S6_partial_fractions(std::size_t order) {
  return lambert_sum(
      order, [](std::size_t k) { return k; },
      [](std::size_t k, std::size_t n) {
        const std::size_t m = 2 * k + 1;
        QSeries term = QSeries::zero(n);
        for (std::size_t i = 0; i < kPartialFractionConstants.size(); ++i) {
          const auto r = static_cast<unsigned>(kPartialFractionConstants.size() - i);
          term = add(term, scale(geom_pow(m, r, n), kPartialFractionConstants[i]));
        }
        return term;
      });
}

QSeries sigma5_odd_gf(std::size_t order) {
  const DivisorSumTable table = sigma5_table(2 * order + 1);
  std::vector<BigInt> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    c[n] = table(2 * n + 1);
  }
  return {std::move(c), order};
}

} // namespace qzeta
