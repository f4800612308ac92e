#include "qzeta/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qzeta/arithfuncs.hpp"
#include "qzeta/genfuncs.hpp"

namespace qzeta {

namespace {

struct NamedIdentity {
  IdentityId id;
  std::string_view name;
  std::string_view alias;
};

constexpr std::array<NamedIdentity, 7> kIdentityNames = {{
    {IdentityId::zeta4_triangular, "zeta4-triangular", "theorem-2-1"},
    {IdentityId::zeta6_triangular, "zeta6-triangular", "theorem-2-2"},
    {IdentityId::phi12_representation, "phi12-representation", "remark-2-1"},
    {IdentityId::gauss_psi_product, "gauss-psi-product", "lemma-3-1"},
    {IdentityId::t12_divisor_formula, "t12-divisor-formula", "theorem-3-2"},
    {IdentityId::partial_fraction_polynomial, "partial-fraction-polynomial", "eq-4-5"},
    {IdentityId::binomial_collapse, "binomial-collapse", "lemma-4-1"},
}};

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
  }

private:
  Clock::time_point start_ = Clock::now();
};

std::vector<BigInt> to_vector(const QSeries& s, std::size_t order) {
  return {s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(order) + 1};
}

void apply_tamper(std::vector<BigInt>& lhs, std::vector<BigInt>& rhs,
                  const std::optional<Tamper>& tamper) {
  if (!tamper) {
    return;
  }
  auto& side = tamper->side == Side::lhs ? lhs : rhs;
  if (tamper->exponent >= side.size()) {
    throw std::out_of_range("tamper exponent beyond verification order");
  }
  side[tamper->exponent] += tamper->delta;
}

std::optional<Mismatch> first_mismatch(const std::vector<BigInt>& lhs,
                                       const std::vector<BigInt>& rhs) {
  const std::size_t n = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs[i] != rhs[i]) {
      return Mismatch{i, lhs[i], rhs[i]};
    }
  }
  return std::nullopt;
}

// Keeps the lower-exponent mismatch; ties go to the one already recorded.
void merge(std::optional<Mismatch>& into, std::optional<Mismatch> other) {
  if (other && (!into || other->exponent < into->exponent)) {
    into = std::move(other);
  }
}

VerificationReport finish(IdentityId id, std::size_t order, std::optional<Mismatch> mismatch,
                          const Stopwatch& watch) {
  const Status status = mismatch ? Status::mismatch : Status::verified;
  return {id, order, status, std::move(mismatch), watch.elapsed()};
}

VerificationReport compare_series(IdentityId id, std::size_t order, const QSeries& lhs,
                                  const QSeries& rhs, const std::optional<Tamper>& tamper,
                                  const Stopwatch& watch) {
  auto l = to_vector(lhs, order);
  auto r = to_vector(rhs, order);
  apply_tamper(l, r, tamper);
  return finish(id, order, first_mismatch(l, r), watch);
}

// 256 q psi^12, truncated back to `order`.
QSeries shifted_psi12_term(std::size_t order) {
  return scale(shift(psi12(order), 1), 256).truncated(order);
}

BigInt rising(std::size_t j, unsigned len) {
  BigInt p = 1;
  for (unsigned i = 1; i <= len; ++i) {
    p *= j + i;
  }
  return p;
}

} // namespace

std::string_view name_of(IdentityId id) {
  for (const auto& entry : kIdentityNames) {
    if (entry.id == id) {
      return entry.name;
    }
  }
  throw std::logic_error("unknown IdentityId");
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  std::string n(name);
  for (char& c : n) {
    c = c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  for (const auto& entry : kIdentityNames) {
    if (n == entry.name || n == entry.alias) {
      return entry.id;
    }
  }
  return std::nullopt;
}

std::size_t default_order(IdentityId id) {
  switch (id) {
  case IdentityId::zeta4_triangular:
  case IdentityId::zeta6_triangular:
  case IdentityId::phi12_representation:
    return 200;
  case IdentityId::gauss_psi_product:
    return 500;
  case IdentityId::t12_divisor_formula:
    return 100;
  case IdentityId::partial_fraction_polynomial:
    return 5;
  case IdentityId::binomial_collapse:
    return 1000;
  }
  throw std::logic_error("unknown IdentityId");
}

VerificationReport verify_zeta4_identity(std::size_t order, std::optional<Tamper> tamper) {
  Stopwatch watch;
  return compare_series(IdentityId::zeta4_triangular, order, S4_lhs(order), psi8(order), tamper,
                        watch);
}

VerificationReport verify_zeta6_identity(std::size_t order, std::optional<Tamper> tamper) {
  Stopwatch watch;
  const QSeries lhs = sub(S6_direct(order), phi12(order));
  return compare_series(IdentityId::zeta6_triangular, order, lhs, shifted_psi12_term(order),
                        tamper, watch);
}

VerificationReport verify_phi12_representation(std::size_t order, std::optional<Tamper> tamper) {
  Stopwatch watch;
  auto rebuilt = to_vector(sub(S6_direct(order), shifted_psi12_term(order)), order);
  auto product = to_vector(phi12(order), order);
  apply_tamper(rebuilt, product, tamper);
  const auto pentagonal = to_vector(pow(pentagonal_coeffs(order), 12), order);

  std::optional<Mismatch> mismatch = first_mismatch(rebuilt, product);
  merge(mismatch, first_mismatch(pentagonal, product));
  return finish(IdentityId::phi12_representation, order, std::move(mismatch), watch);
}

VerificationReport verify_gauss_product(std::size_t order, std::optional<Tamper> tamper) {
  Stopwatch watch;
  return compare_series(IdentityId::gauss_psi_product, order, psi_theta(order),
                        psi_product(order), tamper, watch);
}

VerificationReport verify_t12_divisor_formula(std::size_t n_max, std::optional<Tamper> tamper) {
  Stopwatch watch;
  const QSeries t12 = psi12(n_max);
  const QSeries phi12_series = phi12(n_max + 1);
  const DivisorSumTable sigma = sigma5_table(2 * n_max + 3);

  std::vector<BigInt> lhs(n_max + 1);
  std::vector<BigInt> rhs(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    lhs[n] = 256 * t12[n];
    rhs[n] = sigma(2 * n + 3) - eta12_odd_coeff(2 * n + 3, phi12_series);
  }
  apply_tamper(lhs, rhs, tamper);

  for (std::size_t n = 0; n <= n_max; ++n) {
    if (rhs[n] % 256 != 0 || lhs[n] != rhs[n]) {
      return finish(IdentityId::t12_divisor_formula, n_max, Mismatch{n, lhs[n], rhs[n]}, watch);
    }
    if (n <= kBruteForceCap) {
      const BigInt enumerated = 256 * t12_bruteforce(n);
      if (enumerated != lhs[n]) {
        return finish(IdentityId::t12_divisor_formula, n_max, Mismatch{n, lhs[n], enumerated},
                      watch);
      }
    }
  }
  return finish(IdentityId::t12_divisor_formula, n_max, std::nullopt, watch);
}

VerificationReport verify_partial_fraction_polynomial(std::optional<Tamper> tamper) {
  Stopwatch watch;
  constexpr std::size_t degree = 5;
  std::vector<BigInt> lhs(kOnePlusXTimesP4.begin(), kOnePlusXTimesP4.end());

  // (1+x) P4(x) rebuilt from P4 directly, so the stored constant is checked too.
  std::vector<BigInt> from_p4(degree + 1);
  for (std::size_t d = 0; d < kP4.size(); ++d) {
    from_p4[d] += kP4[d];
    from_p4[d + 1] += kP4[d];
  }

  // sum_i c_i (1 - x)^i
  std::vector<BigInt> rhs(degree + 1);
  for (std::size_t i = 0; i < kPartialFractionConstants.size(); ++i) {
    BigInt binom = 1;
    for (std::size_t d = 0; d <= i; ++d) {
      const BigInt term = kPartialFractionConstants[i] * binom;
      rhs[d] += (d % 2 == 0) ? term : BigInt(-term);
      binom = binom * (i - d) / (d + 1);
    }
  }
  apply_tamper(lhs, rhs, tamper);

  std::optional<Mismatch> mismatch = first_mismatch(lhs, rhs);
  merge(mismatch, first_mismatch(from_p4, lhs));
  return finish(IdentityId::partial_fraction_polynomial, degree, std::move(mismatch), watch);
}

VerificationReport verify_binomial_collapse(std::size_t j_max, std::optional<Tamper> tamper) {
  Stopwatch watch;
  std::vector<BigInt> lhs(j_max + 1);
  std::vector<BigInt> rhs(j_max + 1);
  for (std::size_t j = 0; j <= j_max; ++j) {
    lhs[j] = 32 * rising(j, 5) - 400 * rising(j, 4) + 1360 * rising(j, 3) - 1320 * rising(j, 2) +
             242 * rising(j, 1) - 1;
    BigInt odd = 2 * j + 1;
    rhs[j] = odd * odd * odd * odd * odd;
  }
  apply_tamper(lhs, rhs, tamper);
  return finish(IdentityId::binomial_collapse, j_max, first_mismatch(lhs, rhs), watch);
}

VerificationReport verify(IdentityId id, std::size_t order, std::optional<Tamper> tamper) {
  switch (id) {
  case IdentityId::zeta4_triangular:
    return verify_zeta4_identity(order, tamper);
  case IdentityId::zeta6_triangular:
    return verify_zeta6_identity(order, tamper);
  case IdentityId::phi12_representation:
    return verify_phi12_representation(order, tamper);
  case IdentityId::gauss_psi_product:
    return verify_gauss_product(order, tamper);
  case IdentityId::t12_divisor_formula:
    return verify_t12_divisor_formula(order, tamper);
  case IdentityId::partial_fraction_polynomial:
    return verify_partial_fraction_polynomial(tamper);
  case IdentityId::binomial_collapse:
    return verify_binomial_collapse(order, tamper);
  }
  throw std::logic_error("unknown IdentityId");
}

} // namespace qzeta
