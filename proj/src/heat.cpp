#include "aw/heat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aw/combinatorics.hpp"
#include "aw/kernels.hpp"
#include "aw/rng.hpp"

namespace aw {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void trim(std::vector<double>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
}

// sum_{l=M+1}^{M+60} x^l / l!
double exp_tail(double x, int from_exclusive) {
  double term = 1.0;
  for (int l = 1; l <= from_exclusive; ++l) term *= x / l;
  double acc = 0.0;
  for (int l = from_exclusive + 1; l <= from_exclusive + 60; ++l) {
    term *= x / l;
    acc += term;
  }
  return acc;
}

}  // namespace

Poly1D::Poly1D(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Poly1D Poly1D::monomial(int k, double c) {
  if (k < 0) throw std::invalid_argument("Poly1D::monomial: negative degree");
  std::vector<double> coeffs(static_cast<std::size_t>(k) + 1, 0.0);
  coeffs.back() = c;
  return Poly1D(std::move(coeffs));
}

double Poly1D::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly1D Poly1D::derivative() const {
  if (coeffs_.size() <= 1) return Poly1D();
  std::vector<double> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return Poly1D(std::move(out));
}

Poly1D operator+(const Poly1D& p, const Poly1D& q) {
  std::vector<double> out(std::max(p.coeffs_.size(), q.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) out[k] += p.coeffs_[k];
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) out[k] += q.coeffs_[k];
  return Poly1D(std::move(out));
}

Poly1D operator*(const Poly1D& p, const Poly1D& q) {
  if (p.coeffs_.empty() || q.coeffs_.empty()) return Poly1D();
  std::vector<double> out(p.coeffs_.size() + q.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Poly1D(std::move(out));
}

Poly1D operator*(double s, const Poly1D& p) {
  std::vector<double> out = p.coeffs_;
  for (double& c : out) c *= s;
  return Poly1D(std::move(out));
}

Poly1D hermite_with_parameter(int n, double t) {
  if (n < 0) throw std::invalid_argument("hermite_with_parameter: negative degree");
  Poly1D prev(std::vector<double>{1.0});
  if (n == 0) return prev;
  Poly1D cur(std::vector<double>{0.0, 1.0});
  const Poly1D x = cur;
  for (int d = 1; d < n; ++d) {
    Poly1D next = x * cur + (-static_cast<double>(d) * t) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ChaosVector poly_of_chaos(const Poly1D& p, const ChaosVector& x) {
  if (p.degree() < 0) return ChaosVector(x.modes(), x.order_cap());
  ChaosVector acc = constant(p.coeffs().back(), x.modes(), x.order_cap());
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = pointwise_product(acc, x) +
          constant(p.coeffs()[static_cast<std::size_t>(k)], x.modes(), x.order_cap());
  }
  return acc;
}

ChaosVector functional_calculus(const Poly1D& p, const ChaosVector& x) {
  return gamma_scale(poly_of_chaos(p, gamma_scale(x, kSqrt2)), 1.0 / kSqrt2);
}

Poly1D heat_solution_poly(const Poly1D& f, double t) {
  if (t < 0.0) throw std::invalid_argument("heat_solution_poly: negative time");
  if (f.degree() < 0) return Poly1D();
  std::vector<double> out(f.coeffs().size(), 0.0);
  for (int k = 0; k <= f.degree(); ++k) {
    const double c = f.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0.0) continue;
    for (int j = 0; 2 * j <= k; ++j) {
      out[static_cast<std::size_t>(k - 2 * j)] +=
          c * binomial(k, 2 * j) * double_factorial_odd(2 * j - 1) * pow_int(t, j);
    }
  }
  return Poly1D(std::move(out));
}

double heat_solution_quadrature(const std::function<double(double)>& f, double t, double x,
                                int nodes) {
  if (!(t > 0.0)) throw std::invalid_argument("heat_solution_quadrature: t must be positive");
  return gaussian_expectation(f, x, std::sqrt(t), nodes);
}

ResidualReport heat_representation_residual(const Poly1D& f, const TimeGrid& grid, double t,
                                            int order_cap) {
  const int cap = std::max(order_cap, std::max(0, f.degree()));
  const L2Function bt = indicator(grid, t);
  const ChaosVector chaos_bt = gaussian_of(bt, cap);
  const ChaosVector via_heat = poly_of_chaos(heat_solution_poly(f, t), chaos_bt);
  const ChaosVector via_calculus = functional_calculus(f, chaos_bt);
  return ResidualReport{max_abs_coeff_diff(via_heat, via_calculus),
                        std::max(max_abs_coeff(via_heat), max_abs_coeff(via_calculus))};
}

ResidualReport heat_product_residual(const Poly1D& f, const Poly1D& g, const TimeGrid& grid,
                                     double t, int order_cap) {
  const int need = std::max(0, f.degree()) + std::max(0, g.degree());
  const int cap = std::max(order_cap, need);
  const L2Function bt = indicator(grid, t);
  const ChaosVector chaos_bt = gaussian_of(bt, cap);
  const ChaosVector u = poly_of_chaos(heat_solution_poly(f, t), chaos_bt);
  const ChaosVector v = poly_of_chaos(heat_solution_poly(g, t), chaos_bt);
  const ChaosVector lhs = anti_wick_series(u, v);
  const ChaosVector rhs = poly_of_chaos(heat_solution_poly(f * g, t), chaos_bt);
  return ResidualReport{max_abs_coeff_diff(lhs, rhs),
                        std::max(max_abs_coeff(lhs), max_abs_coeff(rhs))};
}

ExpFunctionalResult exp_functional_check(const L2Function& h, int taylor_order) {
  if (taylor_order < 0) throw std::invalid_argument("exp_functional_check: negative order");
  const int cap = taylor_order;
  const ChaosVector x = gaussian_of(h, std::max(1, cap));

  std::vector<double> exp_coeffs(static_cast<std::size_t>(taylor_order) + 1);
  exp_coeffs[0] = 1.0;
  for (int k = 1; k <= taylor_order; ++k) {
    exp_coeffs[static_cast<std::size_t>(k)] = exp_coeffs[static_cast<std::size_t>(k - 1)] / k;
  }
  const Poly1D exp_taylor(std::move(exp_coeffs));

  const ChaosVector lhs = functional_calculus(exp_taylor, x);
  const double hh = h.squared_norm();
  const ChaosVector rhs = std::exp(hh) * stochastic_exponential(h, cap);

  ExpFunctionalResult out{};
  out.residual = max_abs_coeff_diff(lhs, rhs);

  // Coefficient-k error of the truncated route is
  // (|h|^k/k!) sum_{l > floor((K-k)/2)} |h|^{2l}/l!  (exact when h is
  // supported on a single mode; the dominant-mode bound otherwise).
  const double c = std::sqrt(hh);
  double bound = 0.0;
  double ck = 1.0;  // c^k / k!
  for (int k = 0; k <= taylor_order; ++k) {
    if (k > 0) ck *= c / k;
    bound = std::max(bound, ck * exp_tail(hh, (taylor_order - k) / 2));
  }
  out.tail_bound = bound;

  // Wick counterpart: sum_n X^{<>n}/n! reproduces the stochastic
  // exponential exactly on retained orders.
  ChaosVector wick_exp = constant(1.0, x.modes(), x.order_cap());
  ChaosVector power = constant(1.0, x.modes(), x.order_cap());
  for (int n = 1; n <= x.order_cap(); ++n) {
    power = wick_product(power, x);
    if (power.empty()) break;
    wick_exp = wick_exp + (1.0 / factorial(n)) * power;
  }
  out.wick_residual = max_abs_coeff_diff(wick_exp, stochastic_exponential(h, x.order_cap()));
  return out;
}

AnalyticFunction AnalyticFunction::cosine(int chaos_degree) {
  AnalyticFunction f;
  f.name = "cos";
  f.fn = [](double x) { return std::cos(x); };
  f.taylor.assign(96, 0.0);
  double c = 1.0;  // (-1)^{k/2} / k!
  f.taylor[0] = 1.0;
  for (int k = 2; k < 96; k += 2) {
    c /= -static_cast<double>(k - 1) * k;
    f.taylor[static_cast<std::size_t>(k)] = c;
  }
  f.chaos_degree = chaos_degree;
  return f;
}

AnalyticFunction AnalyticFunction::exponential(int chaos_degree) {
  AnalyticFunction f;
  f.name = "exp";
  f.fn = [](double x) { return std::exp(x); };
  f.taylor.assign(96, 0.0);
  f.taylor[0] = 1.0;
  for (int k = 1; k < 96; ++k) {
    f.taylor[static_cast<std::size_t>(k)] = f.taylor[static_cast<std::size_t>(k - 1)] / k;
  }
  f.chaos_degree = chaos_degree;
  return f;
}

McPairingResult mc_pairing_check(const AnalyticFunction& f, const TimeGrid& grid, double t,
                                 const L2Function& h, const McConfig& cfg, int quad_nodes) {
  if (!(h.grid() == grid)) throw std::invalid_argument("mc_pairing_check: grid mismatch");
  if (cfg.samples < 1) throw std::invalid_argument("mc_pairing_check: need at least one sample");
  const int m = grid.cells();
  const L2Function bt = indicator(grid, t);

  // Exact side: pair the truncated functional calculus against E(h).
  const int cap = f.chaos_degree;
  std::vector<double> head(f.taylor.begin(),
                           f.taylor.begin() + std::min<std::size_t>(f.taylor.size(),
                                                                    static_cast<std::size_t>(cap) + 1));
  const Poly1D p(std::move(head));
  const ChaosVector chaos_bt = gaussian_of(bt, std::max(1, cap));
  const ChaosVector calculus = functional_calculus(p, chaos_bt);
  const double rhs = pair_expectation(calculus, h);

  // MC side: E[u(t, B_t) E(h)] with u by Gauss-Hermite at each sample.
  const double h_norm_sq = h.squared_norm();
  const GaussHermiteRule rule = gauss_hermite(quad_nodes);
  const double scale = std::sqrt(2.0 * t);
  const auto& ops = kernels::active_ops();
  std::vector<double> b_values(rng::kBlockSamples);
  std::vector<double> h_values(rng::kBlockSamples);
  const rng::McStats stats = rng::run_mc(
      cfg.seed, cfg.samples, m, [&](const double* xi, int count, double* values) {
        ops.dot_batch(bt.coeffs().data(), m, xi, count, b_values.data());
        ops.dot_batch(h.coeffs().data(), m, xi, count, h_values.data());
        for (int s = 0; s < count; ++s) {
          const double b = b_values[static_cast<std::size_t>(s)];
          double u;
          if (t > 0.0) {
            double acc = 0.0;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
              acc += rule.weights[q] * f.fn(b + scale * rule.nodes[q]);
            }
            u = acc / std::sqrt(M_PI);
          } else {
            u = f.fn(b);
          }
          const double w = std::exp(h_values[static_cast<std::size_t>(s)] - 0.5 * h_norm_sq);
          values[s] = u * w;
        }
      });

  // Taylor tail of the rhs truncation: sum_{k>K} |a_k| E[(|c| + sqrt(2t)|Z|)^k]
  // with c = <1_{[0,t]}, h>.
  const double c = std::abs(inner_product(bt, h));
  const double sdev = std::sqrt(2.0 * t);
  double tail = 0.0;
  for (std::size_t k = static_cast<std::size_t>(cap) + 1; k < f.taylor.size(); ++k) {
    const double a = std::abs(f.taylor[k]);
    if (a == 0.0) continue;
    double moment = 0.0;
    for (std::size_t j = 0; j <= k; ++j) {
      moment += binomial(static_cast<int>(k), static_cast<int>(j)) *
                pow_int(c, static_cast<int>(k - j)) * pow_int(sdev, static_cast<int>(j)) *
                abs_normal_moment(static_cast<int>(j));
    }
    tail += a * moment;
  }

  McPairingResult out{};
  out.lhs = stats.mean();
  out.rhs = rhs;
  out.sigma = stats.std_error();
  out.tail_bound = tail;
  out.samples = cfg.samples;
  out.seed = cfg.seed;
  return out;
}

}  // namespace aw
