#ifndef QZETA_VERIFIER_HPP
#define QZETA_VERIFIER_HPP

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>

#include "qzeta/qseries.hpp"

namespace qzeta {

enum class IdentityId {
  zeta4_triangular,       // Lambert sum with P2 == psi^8
  zeta6_triangular,       // S6 - phi^12 == 256 q psi^12
  phi12_representation,   // phi^12 rebuilt from S6 and psi^12; pentagonal route
  gauss_psi_product,      // theta sum of psi == its product form
  t12_divisor_formula,    // 256 t12(n) == sigma5(2n+3) - a(2n+3)
  partial_fraction_polynomial,
  binomial_collapse,
};

inline constexpr std::array<IdentityId, 7> kAllIdentities = {
    IdentityId::zeta4_triangular,      IdentityId::zeta6_triangular,
    IdentityId::phi12_representation,  IdentityId::gauss_psi_product,
    IdentityId::t12_divisor_formula,   IdentityId::partial_fraction_polynomial,
    IdentityId::binomial_collapse,
};

std::string_view name_of(IdentityId id);
// Canonical names plus the short literature-style aliases listed in the README.
std::optional<IdentityId> parse_identity(std::string_view name);

// Order used when the caller does not pick one. For t12_divisor_formula it is
// n_max and for binomial_collapse it is j_max.
std::size_t default_order(IdentityId id);

enum class Status { verified, mismatch };

struct Mismatch {
  std::size_t exponent;
  BigInt lhs;
  BigInt rhs;
};

struct VerificationReport {
  IdentityId identity;
  std::size_t order;
  Status status;
  std::optional<Mismatch> first_mismatch;
  std::chrono::milliseconds elapsed{0};

  bool verified() const noexcept { return status == Status::verified; }
};

// Fault injection: add delta to one coefficient of one side before comparing.
enum class Side { lhs, rhs };
struct Tamper {
  Side side;
  std::size_t exponent;
  long delta;
};

VerificationReport verify_zeta4_identity(std::size_t order, std::optional<Tamper> tamper = {});
VerificationReport verify_zeta6_identity(std::size_t order, std::optional<Tamper> tamper = {});
// lhs is S6 - 256 q psi^12, rhs is prod (1-q^n)^12; the pentagonal-series
// 12th power is compared against rhs as well.
VerificationReport verify_phi12_representation(std::size_t order, std::optional<Tamper> tamper = {});
VerificationReport verify_gauss_product(std::size_t order, std::optional<Tamper> tamper = {});
// For every n <= n_max: 256 t12(n) (lhs) against sigma5(2n+3) - a(2n+3)
// (rhs), with divisibility by 256 checked first; for n <= kBruteForceCap the
// series t12(n) is also checked against tuple enumeration.
VerificationReport verify_t12_divisor_formula(std::size_t n_max, std::optional<Tamper> tamper = {});
// (1+x) P4(x) against the partial-fraction expansion, as degree-5 polynomials.
VerificationReport verify_partial_fraction_polynomial(std::optional<Tamper> tamper = {});
// Binomial combination against (2j+1)^5 for 0 <= j <= j_max.
VerificationReport verify_binomial_collapse(std::size_t j_max, std::optional<Tamper> tamper = {});

VerificationReport verify(IdentityId id, std::size_t order, std::optional<Tamper> tamper = {});

} // namespace qzeta

#endif
