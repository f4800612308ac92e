#ifndef QZETA_QSERIES_HPP
#define QZETA_QSERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace qzeta {

using BigInt = boost::multiprecision::mpz_int;

std::string to_decimal(const BigInt& value);

// Truncated power series in q with exact integer coefficients.
//
// A series of order N is known exactly modulo q^(N+1) and stores N+1
// coefficients. Binary operations return a series whose order is the minimum
// of the operand orders; shift() is the only operation that raises the order.
// Values are immutable once built.
class QSeries {
public:
  QSeries(std::vector<BigInt> coeffs, std::size_t order);

  static QSeries zero(std::size_t order);
  static QSeries one(std::size_t order);
  static QSeries monomial(std::size_t exponent, const BigInt& coeff, std::size_t order);

  std::size_t order() const noexcept { return order_; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }

  // Coefficients 0..m agree. Requires m <= min of both orders.
  bool equal_up_to(const QSeries& other, std::size_t m) const;

  // Lowest exponent <= min order where the two series differ.
  std::optional<std::size_t> first_difference(const QSeries& other) const;

  // Forget everything above q^order. order must not exceed order().
  QSeries truncated(std::size_t order) const;

  // Copy with coeff(exponent) += delta. Used for fault injection.
  QSeries perturbed(std::size_t exponent, long delta) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

private:
  std::vector<BigInt> coeffs_;
  std::size_t order_;
};

QSeries make(std::vector<BigInt> coeffs, std::size_t order);

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries scale(const QSeries& a, const BigInt& c);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries pow(const QSeries& a, unsigned e);
QSeries shift(const QSeries& a, std::size_t m);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const BigInt& c, const QSeries& a) { return scale(a, c); }

// (1 - q^m)^(-r) = sum_j C(j+r-1, r-1) q^(jm), built from exact binomials.
QSeries geom_pow(std::size_t m, unsigned r, std::size_t order);

// One factor of an infinite product: prod_{n>=0} (1 + sign * q^(first + n*step))^power.
struct ProductFactor {
  std::size_t first;
  std::size_t step;
  int sign;
  int power;
};

// Exact truncated infinite product. Throws std::invalid_argument for a factor
// whose constant term is not 1 (first == 0), a zero step, or a sign other
// than +1/-1.
QSeries product_form(std::span<const ProductFactor> factors, std::size_t order);

} // namespace qzeta

#endif
