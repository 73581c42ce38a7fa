#include "aw/products.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aw/combinatorics.hpp"
#include "aw/kernels.hpp"
#include "aw/rng.hpp"

namespace aw {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void require_same_modes(const ChaosVector& x, const ChaosVector& y, const char* op) {
  if (x.modes() != y.modes()) {
    throw std::invalid_argument(std::string(op) + ": mode count mismatch");
  }
}

void accumulate(ChaosVector::Builder& b, const ChaosVector& x, double scale) {
  for (const Term& t : x.terms()) b.add(t.index, scale * t.coeff);
}

// Enumerates beta with |beta| = n clipped to the joint support caps of x
// and y, and feeds A^beta x, A^beta y to `emit` together with the
// multinomial weight n!/beta!.
template <typename Emit>
bool for_each_pairing_term(const ChaosVector& x, const ChaosVector& y, int n, Emit&& emit) {
  const int m = x.modes();
  std::vector<int> caps(static_cast<std::size_t>(m), 0);
  for (const Term& t : x.terms()) {
    for (int i = 0; i < m; ++i) {
      caps[static_cast<std::size_t>(i)] = std::max(caps[static_cast<std::size_t>(i)], t.index[i]);
    }
  }
  for (int i = 0; i < m; ++i) {
    int ymax = 0;
    for (const Term& t : y.terms()) ymax = std::max(ymax, t.index[i]);
    caps[static_cast<std::size_t>(i)] = std::min(caps[static_cast<std::size_t>(i)], ymax);
  }
  std::vector<int> suffix(static_cast<std::size_t>(m) + 1, 0);
  for (int i = m - 1; i >= 0; --i) {
    suffix[static_cast<std::size_t>(i)] =
        suffix[static_cast<std::size_t>(i) + 1] + caps[static_cast<std::size_t>(i)];
  }
  const double n_fact = factorial(n);
  bool any = false;
  std::vector<int> beta(static_cast<std::size_t>(m), 0);
  auto descend = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == m) {
      if (remaining != 0) return;
      const MultiIndex bidx = MultiIndex::from_exponents(beta);
      const ChaosVector dx = annihilate_multi(x, bidx);
      if (dx.empty()) return;
      const ChaosVector dy = annihilate_multi(y, bidx);
      if (dy.empty()) return;
      any = true;
      emit(dx, dy, n_fact / bidx.factorial());
      return;
    }
    if (remaining > suffix[static_cast<std::size_t>(mode)]) return;
    const int top = std::min(remaining, caps[static_cast<std::size_t>(mode)]);
    for (int k = 0; k <= top; ++k) {
      beta[static_cast<std::size_t>(mode)] = k;
      self(self, mode + 1, remaining - k);
    }
    beta[static_cast<std::size_t>(mode)] = 0;
  };
  descend(descend, 0, n);
  return any;
}

}  // namespace

PhiSeries::PhiSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.front() != 1.0) {
    throw std::invalid_argument("PhiSeries: constant term must be 1");
  }
}

PhiSeries PhiSeries::one() { return PhiSeries(std::vector<double>{1.0}); }

PhiSeries PhiSeries::affine() { return PhiSeries(std::vector<double>{1.0, 1.0}); }

PhiSeries PhiSeries::exponential(double alpha, int order) {
  if (order < 0) throw std::invalid_argument("PhiSeries: negative order");
  std::vector<double> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    coeffs[static_cast<std::size_t>(k)] = coeffs[static_cast<std::size_t>(k - 1)] * alpha / k;
  }
  return PhiSeries(std::move(coeffs));
}

PhiSeries PhiSeries::exponential_to_tolerance(double alpha, double max_abs_x, double tol) {
  const double a = std::abs(alpha) * std::max(1.0, std::abs(max_abs_x));
  int order = 1;
  double tail = 0.5 * a * a;  // |alpha x|^{K+1}/(K+1)! at K = order
  while (tail >= tol && order < 170) {
    ++order;
    tail *= a / (order + 1);
  }
  return exponential(alpha, order);
}

double PhiSeries::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ChaosVector circle_phi(const ChaosVector& x, const ChaosVector& y, const PhiSeries& phi) {
  require_same_modes(x, y, "circle_phi");
  if (phi.coeffs().front() != 1.0) throw std::invalid_argument("circle_phi: phi(0) must be 1");
  const int top = std::min({phi.order(), x.degree(), y.degree()});
  const int cap = std::min(x.order_cap(), y.order_cap());
  ChaosVector::Builder b(x.modes(), cap);
  bool truncated = x.truncated() || y.truncated();
  for (int n = 0; n <= top; ++n) {
    const double a_n = phi.coeffs()[static_cast<std::size_t>(n)];
    if (a_n == 0.0) continue;
    const ChaosVector pairing = iterated_pairing(x, y, n);
    truncated = truncated || pairing.truncated();
    accumulate(b, pairing, a_n);
  }
  b.set_truncated(truncated);
  return std::move(b).build();
}

ChaosVector anti_wick_series(const ChaosVector& x, const ChaosVector& y) {
  require_same_modes(x, y, "anti_wick_series");
  // phi = exp truncated at min(deg X, deg Y); the drop is exact.
  const int top = std::min(x.degree(), y.degree());
  return circle_phi(x, y, PhiSeries::exponential(1.0, top));
}

ChaosVector anti_wick_gamma(const ChaosVector& x, const ChaosVector& y) {
  require_same_modes(x, y, "anti_wick_gamma");
  const ChaosVector wide = pointwise_product(gamma_scale(x, kSqrt2), gamma_scale(y, kSqrt2));
  return gamma_scale(wide, 1.0 / kSqrt2);
}

ProbeSides associativity_probe(const PhiSeries& phi, const L2Function& f, const L2Function& g,
                               const L2Function& h) {
  const double fg = inner_product(f, g);
  const double gh = inner_product(g, h);
  const double f_plus_g_h = inner_product(f + g, h);
  const double f_g_plus_h = inner_product(f, g + h);
  return ProbeSides{phi(fg) * phi(f_plus_g_h), phi(f_g_plus_h) * phi(gh)};
}

ChaosVector wick_to_antiwick(const ChaosVector& x, const ChaosVector& y) {
  require_same_modes(x, y, "wick_to_antiwick");
  const int top = std::min(x.degree(), y.degree());
  const int cap = std::min(x.order_cap(), y.order_cap());
  ChaosVector::Builder b(x.modes(), cap);
  bool truncated = x.truncated() || y.truncated();
  for (int n = 0; n <= top; ++n) {
    const double outer = pow_int(2.0, n) / factorial(n);
    for_each_pairing_term(x, y, n, [&](const ChaosVector& dx, const ChaosVector& dy, double w) {
      const ChaosVector prod = wick_product(dx, dy);
      truncated = truncated || prod.truncated();
      accumulate(b, prod, outer * w);
    });
  }
  b.set_truncated(truncated);
  return std::move(b).build();
}

ChaosVector antiwick_to_wick(const ChaosVector& x, const ChaosVector& y) {
  require_same_modes(x, y, "antiwick_to_wick");
  const int top = std::min(x.degree(), y.degree());
  const int cap = std::min(x.order_cap(), y.order_cap());
  ChaosVector::Builder b(x.modes(), cap);
  bool truncated = x.truncated() || y.truncated();
  for (int n = 0; n <= top; ++n) {
    const double outer = pow_int(-2.0, n) / factorial(n);
    for_each_pairing_term(x, y, n, [&](const ChaosVector& dx, const ChaosVector& dy, double w) {
      const ChaosVector prod = anti_wick_series(dx, dy);
      truncated = truncated || prod.truncated();
      accumulate(b, prod, outer * w);
    });
  }
  b.set_truncated(truncated);
  return std::move(b).build();
}

L1BoundResult l1_bound_check(const ChaosVector& x, const ChaosVector& y, std::int64_t samples,
                             std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("l1_bound_check: need at least one sample");
  const ChaosVector product = anti_wick_series(x, y);
  const kernels::PackedChaos packed = kernels::pack(product);
  const auto& ops = kernels::active_ops();
  const rng::McStats stats =
      rng::run_mc(seed, samples, product.modes(),
                  [&](const double* xi, int count, double* values) {
                    ops.eval_batch(packed, xi, count, values);
                  });
  L1BoundResult out;
  out.mc_l1 = stats.mean_abs();
  out.bound = norm_g(x, kSqrt2) * norm_g(y, kSqrt2);
  out.std_error = stats.std_error_abs();
  out.samples = samples;
  out.seed = seed;
  out.truncated = product.truncated();
  return out;
}

}  // namespace aw
