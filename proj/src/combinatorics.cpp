#include "aw/combinatorics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace aw {

namespace {

using uint128 = unsigned __int128;

constexpr int kExactFactorialMax = 33;  // 33! < 2^128

std::array<double, 171> build_factorials() {
  std::array<double, 171> table{};
  uint128 acc = 1;
  for (int n = 0; n <= kExactFactorialMax; ++n) {
    if (n > 0) acc *= static_cast<uint128>(n);
    table[static_cast<std::size_t>(n)] = static_cast<double>(acc);
  }
  for (int n = kExactFactorialMax + 1; n <= 170; ++n) {
    table[static_cast<std::size_t>(n)] =
        table[static_cast<std::size_t>(n - 1)] * static_cast<double>(n);
  }
  return table;
}

const std::array<double, 171>& factorial_table() {
  static const std::array<double, 171> table = build_factorials();
  return table;
}

constexpr int kPascalMax = 62;  // C(62,31) < 2^63

const std::array<std::array<unsigned long long, kPascalMax + 1>, kPascalMax + 1>&
pascal_table() {
  static const auto table = [] {
    std::array<std::array<unsigned long long, kPascalMax + 1>, kPascalMax + 1> t{};
    for (int n = 0; n <= kPascalMax; ++n) {
      t[static_cast<std::size_t>(n)][0] = 1;
      for (int k = 1; k <= n; ++k) {
        t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
            (k <= n - 1 ? t[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)]
                        : 0ULL);
      }
    }
    return t;
  }();
  return table;
}

uint128 exact_factorial_u128(int n) {
  uint128 acc = 1;
  for (int i = 2; i <= n; ++i) acc *= static_cast<uint128>(i);
  return acc;
}

}  // namespace

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  if (n <= 170) return factorial_table()[static_cast<std::size_t>(n)];
  return std::numeric_limits<double>::infinity();
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n <= kPascalMax) {
    return static_cast<double>(
        pascal_table()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
  }
  k = std::min(k, n - k);
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) acc = acc * static_cast<double>(n - k + i) / i;
  return acc;
}

double double_factorial_odd(int n) {
  if (n < -1 || n % 2 == 0) {
    throw std::invalid_argument("double_factorial_odd: n must be odd or -1");
  }
  double acc = 1.0;
  for (int i = 3; i <= n; i += 2) acc *= static_cast<double>(i);
  return acc;
}

double falling_factorial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  unsigned long long acc = 1;
  bool fits = true;
  for (int i = 0; i < k; ++i) {
    const auto f = static_cast<unsigned long long>(n - i);
    if (acc > ~0ULL / (f == 0 ? 1 : f)) {
      fits = false;
      break;
    }
    acc *= f;
  }
  if (fits) return static_cast<double>(acc);
  double dacc = 1.0;
  for (int i = 0; i < k; ++i) dacc *= static_cast<double>(n - i);
  return dacc;
}

double hermite_linearization(int a, int b, int k) {
  if (k < 0 || k > std::min(a, b)) return 0.0;
  if (k > kExactFactorialMax || a > kPascalMax || b > kPascalMax) {
    throw std::invalid_argument("hermite_linearization: degree beyond supported cap");
  }
  const uint128 v = exact_factorial_u128(k) *
                    static_cast<uint128>(pascal_table()[static_cast<std::size_t>(a)]
                                                       [static_cast<std::size_t>(k)]) *
                    static_cast<uint128>(pascal_table()[static_cast<std::size_t>(b)]
                                                       [static_cast<std::size_t>(k)]);
  return static_cast<double>(v);
}

double abs_normal_moment(int k) {
  if (k < 0) throw std::invalid_argument("abs_normal_moment: negative order");
  if (k == 0) return 1.0;
  if (k % 2 == 0) return double_factorial_odd(k - 1);
  // E|Z|^k = 2^{(k-1)/2} ((k-1)/2)! sqrt(2/pi) for odd k
  const int h = (k - 1) / 2;
  return std::sqrt(2.0 / M_PI) * pow_int(2.0, h) * factorial(h);
}

double pow_int(double x, int n) {
  if (n < 0) throw std::invalid_argument("pow_int: negative exponent");
  double acc = 1.0;
  double base = x;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace aw
