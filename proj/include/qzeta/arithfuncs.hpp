#ifndef QZETA_ARITHFUNCS_HPP
#define QZETA_ARITHFUNCS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qzeta/qseries.hpp"

namespace qzeta {

/// Largest n accepted by the tuple-enumeration oracles.
inline constexpr std::uint64_t kBruteForceCap = 50;

/// sigma_5(n) = sum of d^5 over divisors d of n, by trial division.
/// Throws std::domain_error for n == 0.
BigInt sigma5(std::uint64_t n);

/// sigma_5(1..limit) filled by a divisor sieve. values[0] is unused (0).
struct DivisorSumTable {
  std::vector<BigInt> values;
  std::size_t limit = 0;

  const BigInt& operator()(std::size_t n) const;
};

DivisorSumTable sigma5_table(std::size_t limit);

BigInt triangular(std::uint64_t n);

/// Number of ordered `parts`-tuples of triangular numbers (0 allowed) summing
/// to n, by memoized enumeration over the last part. Independent of the
/// series arithmetic. Throws std::domain_error when n > kBruteForceCap.
BigInt count_triangular_tuples(unsigned parts, std::uint64_t n);

/// Representations of n as an ordered sum of 12 triangular numbers.
BigInt t12_bruteforce(std::uint64_t n);

/// sum over k in Z of (-1)^k q^(k(3k-1)/2), truncated at `order`.
QSeries pentagonal_coeffs(std::size_t order);

} // namespace qzeta

#endif
