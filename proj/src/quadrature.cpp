#include "aw/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace aw {

namespace {

// Orthonormal Hermite functions (weight exp(-y^2)) evaluated by the stable
// normalized recurrence; returns (p_n(y), p_{n-1}(y)).
std::pair<double, double> hermite_orthonormal(int n, double y) {
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(std::sqrt(M_PI));
  for (int j = 0; j < n; ++j) {
    const double p_next =
        y * std::sqrt(2.0 / (j + 1)) * p - std::sqrt(static_cast<double>(j) / (j + 1)) * p_prev;
    p_prev = p;
    p = p_next;
  }
  return {p, p_prev};
}

}  // namespace

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: need at least one node");
  GaussHermiteRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);

  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    // Asymptotic initial guesses, refined by Newton iteration.
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[static_cast<std::size_t>(i - 2)];
    }
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, p_prev] = hermite_orthonormal(n, z);
      const double dp = std::sqrt(2.0 * n) * p_prev;
      const double step = p / dp;
      z -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    const auto [p, p_prev] = hermite_orthonormal(n, z);
    (void)p;
    const double dp = std::sqrt(2.0 * n) * p_prev;
    rule.nodes[static_cast<std::size_t>(i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / (dp * dp);
    // Mirror: nodes are symmetric about zero.
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = -z;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = rule.weights[static_cast<std::size_t>(i)];
  }
  return rule;
}

double gaussian_expectation(const std::function<double(double)>& f, double mean, double stddev,
                            int n) {
  const GaussHermiteRule rule = gauss_hermite(n);
  const double scale = std::sqrt(2.0) * stddev;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += rule.weights[static_cast<std::size_t>(i)] *
           f(mean + scale * rule.nodes[static_cast<std::size_t>(i)]);
  }
  return acc / std::sqrt(M_PI);
}

}  // namespace aw
