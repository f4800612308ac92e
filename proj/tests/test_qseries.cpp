#include "doctest.h"

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qzeta/genfuncs.hpp"
#include "qzeta/qseries.hpp"

using namespace qzeta;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST_CASE("make") {
  const QSeries one = make(ints({1}), 0);
  CHECK(one.order() == 0);
  CHECK(one[0] == 1);

  const QSeries q = make(ints({0, 1}), 1);
  CHECK(q[1] == 1);

  const QSeries p2 = make(ints({1, 4, 1}), 2);
  CHECK(p2 == make(std::vector<BigInt>(kP2.begin(), kP2.end()), 2));

  CHECK_THROWS_AS(make(ints({1, 2}), 3), std::invalid_argument);
  CHECK_THROWS_AS(make({}, 0), std::invalid_argument);
}

TEST_CASE("add, sub and scale follow the truncation-order algebra") {
  const QSeries sum = add(QSeries::one(3), QSeries::monomial(1, 1, 2));
  CHECK(sum.order() == 2);
  CHECK(sum == make(ints({1, 1, 0}), 2));

  const QSeries a = make(ints({3, -1, 4, 1}), 3);
  CHECK(sub(a, a) == QSeries::zero(3));
  CHECK(scale(a, 256) == make(ints({768, -256, 1024, 256}), 3));
  CHECK(scale(a, 0).order() == 3);
}

TEST_CASE("mul") {
  const QSeries lhs = mul(make(ints({1, -1, 0, 0}), 3), make(ints({1, 1, 1, 1}), 3));
  CHECK(lhs == make(ints({1, 0, 0, 0}), 3));

  const QSeries psi = psi_theta(4);
  const QSeries psi2 = mul(psi, psi);
  CHECK(psi2 == make(ints({1, 2, 1, 2, 2}), 4));
  for (std::int64_t n = 0; n <= 4; ++n) {
    CHECK(psi2[static_cast<std::size_t>(n)] == oracle::triangular_pairs(n));
  }

  // (1 + 4q + q^2) (1 + 4q + 10q^2 + ...) starts 1 + 8q.
  const QSeries k0 = mul(make(ints({1, 4, 1, 0, 0, 0, 0}), 6), geom_pow(1, 4, 6));
  CHECK(k0[0] == 1);
  CHECK(k0[1] == 8);

  // order is the minimum of the operands
  CHECK(mul(QSeries::one(5), QSeries::one(2)).order() == 2);
}

TEST_CASE("pow") {
  const QSeries a = make(ints({2, 7, -3}), 2);
  CHECK(pow(a, 0) == QSeries::one(2));
  CHECK(pow(a, 1) == a);

  CHECK(pow(psi_theta(3), 12) == make(ints({1, 12, 66, 232}), 3));

  const QSeries phi12 = pow(phi_product(4), 12);
  CHECK(phi12 == make(ints({1, -12, 54, -88, -99}), 4));
  CHECK(oracle::matches(phi12, oracle::euler_product_power(12, 4), 4));
}

TEST_CASE("pow agrees with repeated multiplication") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const QSeries a = oracle::random_series(rng, 15, 3);
    QSeries expected = QSeries::one(15);
    const unsigned e = static_cast<unsigned>(trial % 9);
    for (unsigned i = 0; i < e; ++i) expected = mul(expected, a);
    CHECK(pow(a, e) == expected);
  }
}

TEST_CASE("shift") {
  const QSeries q = shift(QSeries::one(0), 1);
  CHECK(q == make(ints({0, 1}), 1));

  const QSeries s = shift(pow(psi_theta(3), 12), 1);
  CHECK(s == make(ints({0, 1, 12, 66, 232}), 4));

  const QSeries z = shift(QSeries::zero(3), 5);
  CHECK(z == QSeries::zero(8));
}

TEST_CASE("shift moves every coefficient") {
  std::mt19937_64 rng(11);
  for (std::size_t m = 0; m < 6; ++m) {
    const QSeries a = oracle::random_series(rng, 20);
    const QSeries s = shift(a, m);
    REQUIRE(s.order() == a.order() + m);
    for (std::size_t i = 0; i < m; ++i) CHECK(s[i] == 0);
    for (std::size_t i = 0; i <= a.order(); ++i) CHECK(s[i + m] == a[i]);
  }
}

TEST_CASE("geom_pow") {
  CHECK(geom_pow(1, 1, 3) == make(ints({1, 1, 1, 1}), 3));
  CHECK(geom_pow(1, 4, 2) == make(ints({1, 4, 10}), 2));
  CHECK(geom_pow(3, 6, 7) == make(ints({1, 0, 0, 6, 0, 0, 21, 0}), 7));
  CHECK_THROWS_AS(geom_pow(0, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(geom_pow(2, 0, 5), std::invalid_argument);
}

TEST_CASE("geom_pow inverts (1 - q^m)^r") {
  const std::size_t N = 40;
  for (std::size_t m = 1; m <= 5; ++m) {
    for (unsigned r = 1; r <= 6; ++r) {
      if (m * r > N) continue;
      const QSeries binomial = pow(sub(QSeries::one(N), QSeries::monomial(m, 1, N)), r);
      CHECK(mul(geom_pow(m, r, N), binomial) == QSeries::one(N));
    }
  }
}

TEST_CASE("product_form") {
  const std::array<ProductFactor, 2> psi = {{{2, 2, -1, 1}, {1, 2, -1, -1}}};
  CHECK(product_form(psi, 10) == make(ints({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}), 10));

  const std::array<ProductFactor, 1> phi = {{{1, 1, -1, 1}}};
  CHECK(product_form(phi, 7) == make(ints({1, -1, -1, 0, 0, 1, 0, 1}), 7));
  CHECK(oracle::matches(product_form(phi, 12), oracle::euler_product_power(1, 12), 12));

  CHECK(product_form({}, 6) == QSeries::one(6));

  const std::array<ProductFactor, 1> zero_constant = {{{0, 1, -1, 1}}};
  CHECK_THROWS_AS(product_form(zero_constant, 4), std::invalid_argument);
  const std::array<ProductFactor, 1> no_step = {{{1, 0, -1, 1}}};
  CHECK_THROWS_AS(product_form(no_step, 4), std::invalid_argument);
  const std::array<ProductFactor, 1> bad_sign = {{{1, 1, 2, 1}}};
  CHECK_THROWS_AS(product_form(bad_sign, 4), std::invalid_argument);
}

TEST_CASE("product_form with positive sign and negative power") {
  // 1/(1+q) = 1 - q + q^2 - ...
  const std::array<ProductFactor, 1> f = {{{1, 100, 1, -1}}};
  CHECK(product_form(f, 4) == make(ints({1, -1, 1, -1, 1}), 4));
  // (1 - q)^3 (1 - q^2)^3 ... matches the int64 expansion
  const std::array<ProductFactor, 1> cube = {{{1, 1, -1, 3}}};
  CHECK(oracle::matches(product_form(cube, 15), oracle::euler_product_power(3, 15), 15));
}

TEST_CASE("ring axioms on truncations") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(trial % 17);
    const QSeries a = oracle::random_series(rng, n);
    const QSeries b = oracle::random_series(rng, n);
    const QSeries c = oracle::random_series(rng, n);
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(add(a, b) == add(b, a));
  }
}

TEST_CASE("comparison helpers") {
  const QSeries a = make(ints({1, 2, 3, 4}), 3);
  const QSeries b = make(ints({1, 2, 9}), 2);
  CHECK(a.equal_up_to(b, 1));
  CHECK_FALSE(a.equal_up_to(b, 2));
  CHECK_THROWS_AS(a.equal_up_to(b, 3), std::out_of_range);
  CHECK(a.first_difference(b) == std::optional<std::size_t>{2});
  CHECK_FALSE(a.first_difference(a).has_value());
  CHECK(a.truncated(1) == make(ints({1, 2}), 1));
  CHECK_THROWS_AS(a.truncated(4), std::out_of_range);
  CHECK(a.perturbed(3, -1)[3] == 3);
}
