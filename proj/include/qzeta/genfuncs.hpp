#ifndef QZETA_GENFUNCS_HPP
#define QZETA_GENFUNCS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "qzeta/qseries.hpp"

namespace qzeta {

// Polynomial coefficient lists, lowest degree first.
inline constexpr std::array<long, 3> kP2 = {1, 4, 1};
inline constexpr std::array<long, 5> kP4 = {1, 236, 1446, 236, 1};
// (1 + x) * P4(x)
inline constexpr std::array<long, 6> kOnePlusXTimesP4 = {1, 237, 1682, 1682, 237, 1};
// Coefficients of (1 - x)^-6, (1 - x)^-5, ..., (1 - x)^-1 in the
// partial-fraction form of (1 + x) P4(x) / (1 - x)^6.
inline constexpr std::array<long, 6> kPartialFractionConstants = {3840, -9600, 8160, -2640, 242, -1};

enum class GenFnId {
  psi,
  phi,
  psi8,
  psi12,
  phi12,
  s4_lhs,
  s6_direct,
  s6_partial_fractions,
  sigma5_odd_gf,
  eta12_odd_coeffs,
};

inline constexpr std::array<GenFnId, 10> kAllGenFns = {
    GenFnId::psi,    GenFnId::phi,       GenFnId::psi8,
    GenFnId::psi12,  GenFnId::phi12,     GenFnId::s4_lhs,
    GenFnId::s6_direct, GenFnId::s6_partial_fractions, GenFnId::sigma5_odd_gf,
    GenFnId::eta12_odd_coeffs,
};

std::string_view name_of(GenFnId id);
// Accepts the canonical name; '_' and '-' are interchangeable, case-insensitive.
std::optional<GenFnId> parse_genfn(std::string_view name);

// Builds the series named by id. eta12_odd_coeffs is the series
// sum_m a(2m+1) q^m, which coincides with phi12.
QSeries build(GenFnId id, std::size_t order);

/// psi(q) = sum_{n>=0} q^(n(n+1)/2).
QSeries psi_theta(std::size_t order);
/// psi(q) = prod (1 - q^(2n)) / (1 - q^(2n-1)).
QSeries psi_product(std::size_t order);
/// Euler's function prod_{n>=1} (1 - q^n) as an explicit product.
QSeries phi_product(std::size_t order);

QSeries psi8(std::size_t order);
QSeries psi12(std::size_t order);
QSeries phi12(std::size_t order);

/// a(odd_index) where eta^12(2 tau) = sum_k a(2k+1) q^(2k+1).
///
/// eta^12(2 tau) = q phi^12(q^2), so a(2m+1) is the coefficient of q^m in
/// phi^12(q). This is the only place that index mapping lives; every caller
/// goes through one of these two overloads. Throws std::invalid_argument for
/// an even index and std::out_of_range if phi12_series is too short.
BigInt eta12_odd_coeff(std::uint64_t odd_index, const QSeries& phi12_series);
BigInt eta12_odd_coeff(std::uint64_t odd_index);

// sum_k q^(2k) P2(q^(2k+1)) / (1 - q^(2k+1))^4
QSeries S4_lhs(std::size_t order);
// sum_k q^k (1 + q^(2k+1)) P4(q^(2k+1)) / (1 - q^(2k+1))^6
QSeries S6_direct(std::size_t order);
// The same sum, expanded through the partial-fraction constants.
QSeries S6_partial_fractions(std::size_t order);
// sum_n sigma5(2n+1) q^n straight from the divisor table.
QSeries sigma5_odd_gf(std::size_t order);

} // namespace qzeta

#endif
