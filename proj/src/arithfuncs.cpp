#include "qzeta/arithfuncs.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qzeta {

namespace {

BigInt fifth_power(std::uint64_t d) {
  BigInt x = d;
  return x * x * x * x * x;
}

} // namespace

BigInt sigma5(std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("sigma5: n must be positive");
  }
  BigInt sum = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) {
      continue;
    }
    sum += fifth_power(d);
    if (d != n / d) {
      sum += fifth_power(n / d);
    }
  }
  return sum;
}

const BigInt& DivisorSumTable::operator()(std::size_t n) const {
  if (n == 0 || n > limit) {
    throw std::out_of_range("DivisorSumTable: index " + std::to_string(n) + " outside 1.." +
                            std::to_string(limit));
  }
  return values[n];
}

DivisorSumTable sigma5_table(std::size_t limit) {
  DivisorSumTable table;
  table.limit = limit;
  table.values.assign(limit + 1, BigInt(0));
  for (std::size_t d = 1; d <= limit; ++d) {
    const BigInt p = fifth_power(d);
    for (std::size_t m = d; m <= limit; m += d) {
      table.values[m] += p;
    }
  }
  return table;
}

BigInt triangular(std::uint64_t n) {
  BigInt x = n;
  return x * (x + 1) / 2;
}

BigInt count_triangular_tuples(unsigned parts, std::uint64_t n) {
  if (n > kBruteForceCap) {
    throw std::domain_error("triangular tuple enumeration refused for n = " + std::to_string(n) +
                            " (cap " + std::to_string(kBruteForceCap) + ")");
  }
  std::vector<std::uint64_t> tri;
  for (std::uint64_t k = 0; k * (k + 1) / 2 <= n; ++k) {
    tri.push_back(k * (k + 1) / 2);
  }

  std::map<std::pair<unsigned, std::uint64_t>, BigInt> memo;
  auto count = [&](auto&& self, unsigned j, std::uint64_t m) -> BigInt {
    if (j == 0) {
      return m == 0 ? 1 : 0;
    }
    const auto key = std::make_pair(j, m);
    if (auto it = memo.find(key); it != memo.end()) {
      return it->second;
    }
    BigInt total = 0;
    for (std::uint64_t t : tri) {
      if (t > m) {
        break;
      }
      total += self(self, j - 1, m - t);
    }
    memo.emplace(key, total);
    return total;
  };
  return count(count, parts, n);
}

BigInt t12_bruteforce(std::uint64_t n) { return count_triangular_tuples(12, n); }

QSeries pentagonal_coeffs(std::size_t order) {
  std::vector<BigInt> c(order + 1);
  c[0] = 1;
  // k = 1, -1, 2, -2, ...; the k > 0 exponent is always the smaller one.
  for (std::size_t k = 1;; ++k) {
    const std::size_t e_pos = k * (3 * k - 1) / 2;
    const std::size_t e_neg = k * (3 * k + 1) / 2;
    if (e_pos > order) {
      break;
    }
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[e_pos] += sign;
    if (e_neg <= order) {
      c[e_neg] += sign;
    }
  }
  return {std::move(c), order};
}

} // namespace qzeta
