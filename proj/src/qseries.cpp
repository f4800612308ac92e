#include "qzeta/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qzeta {

std::string to_decimal(const BigInt& value) { return value.str(); }

QSeries::QSeries(std::vector<BigInt> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (coeffs_.size() != order_ + 1) {
    throw std::invalid_argument("QSeries: expected " + std::to_string(order_ + 1) +
                                " coefficients for order " + std::to_string(order_) +
                                ", got " + std::to_string(coeffs_.size()));
  }
}

QSeries QSeries::zero(std::size_t order) { return {std::vector<BigInt>(order + 1), order}; }

QSeries QSeries::one(std::size_t order) { return monomial(0, 1, order); }

QSeries QSeries::monomial(std::size_t exponent, const BigInt& coeff, std::size_t order) {
  std::vector<BigInt> c(order + 1);
  if (exponent <= order) {
    c[exponent] = coeff;
  }
  return {std::move(c), order};
}

bool QSeries::equal_up_to(const QSeries& other, std::size_t m) const {
  if (m > order_ || m > other.order_) {
    throw std::out_of_range("equal_up_to: comparison order exceeds known precision");
  }
  return std::equal(coeffs_.begin(), coeffs_.begin() + m + 1, other.coeffs_.begin());
}

std::optional<std::size_t> QSeries::first_difference(const QSeries& other) const {
  const std::size_t m = std::min(order_, other.order_);
  for (std::size_t i = 0; i <= m; ++i) {
    if (coeffs_[i] != other.coeffs_[i]) {
      return i;
    }
  }
  return std::nullopt;
}

QSeries QSeries::truncated(std::size_t order) const {
  if (order > order_) {
    throw std::out_of_range("truncated: cannot raise the order of a series");
  }
  return {std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1), order};
}

QSeries QSeries::perturbed(std::size_t exponent, long delta) const {
  QSeries out = *this;
  out.coeffs_.at(exponent) += delta;
  return out;
}

QSeries make(std::vector<BigInt> coeffs, std::size_t order) { return {std::move(coeffs), order}; }

QSeries add(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i] = a[i] + b[i];
  }
  return {std::move(c), n};
}

QSeries sub(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i] = a[i] - b[i];
  }
  return {std::move(c), n};
}

QSeries scale(const QSeries& a, const BigInt& c) {
  std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) {
    x *= c;
  }
  return {std::move(out), a.order()};
}

QSeries mul(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n + 1);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i <= n; ++i) {
    if (ac[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (bc[j] != 0) {
        c[i + j] += ac[i] * bc[j];
      }
    }
  }
  return {std::move(c), n};
}

QSeries pow(const QSeries& a, unsigned e) {
  QSeries result = QSeries::one(a.order());
  QSeries base = a;
  while (e != 0) {
    if (e & 1u) {
      result = mul(result, base);
    }
    e >>= 1;
    if (e != 0) {
      base = mul(base, base);
    }
  }
  return result;
}

QSeries shift(const QSeries& a, std::size_t m) {
  std::vector<BigInt> c(a.order() + m + 1);
  std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + static_cast<std::ptrdiff_t>(m));
  return {std::move(c), a.order() + m};
}

QSeries geom_pow(std::size_t m, unsigned r, std::size_t order) {
  if (m == 0 || r == 0) {
    throw std::invalid_argument("geom_pow: modulus and exponent must be positive");
  }
  std::vector<BigInt> c(order + 1);
  // C(j+r-1, r-1) from C(j+r-2, r-1) * (j+r-1) / j, exact at every step.
  BigInt binom = 1;
  for (std::size_t j = 0; j * m <= order; ++j) {
    if (j > 0) {
      binom *= j + r - 1;
      binom /= j;
    }
    c[j * m] = binom;
  }
  return {std::move(c), order};
}

namespace {

// In place: a *= (1 + sign*q^m).
void mul_binomial(std::vector<BigInt>& a, std::size_t m, int sign) {
  for (std::size_t i = a.size(); i-- > m;) {
    if (sign > 0) {
      a[i] += a[i - m];
    } else {
      a[i] -= a[i - m];
    }
  }
}

// In place: a /= (1 + sign*q^m), i.e. a *= sum_j (-sign q^m)^j.
void div_binomial(std::vector<BigInt>& a, std::size_t m, int sign) {
  for (std::size_t i = m; i < a.size(); ++i) {
    if (sign > 0) {
      a[i] -= a[i - m];
    } else {
      a[i] += a[i - m];
    }
  }
}

} // namespace

QSeries product_form(std::span<const ProductFactor> factors, std::size_t order) {
  for (const auto& f : factors) {
    if (f.first == 0) {
      throw std::invalid_argument("product_form: factor with exponent 0 has constant term != 1");
    }
    if (f.step == 0) {
      throw std::invalid_argument("product_form: step must be positive");
    }
    if (f.sign != 1 && f.sign != -1) {
      throw std::invalid_argument("product_form: sign must be +1 or -1");
    }
  }
  std::vector<BigInt> c(order + 1);
  c[0] = 1;
  for (const auto& f : factors) {
    for (std::size_t m = f.first; m <= order; m += f.step) {
      for (int p = 0; p < f.power; ++p) {
        mul_binomial(c, m, f.sign);
      }
      for (int p = 0; p > f.power; --p) {
        div_binomial(c, m, f.sign);
      }
    }
  }
  return {std::move(c), order};
}

} // namespace qzeta
