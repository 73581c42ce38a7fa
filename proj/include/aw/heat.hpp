#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aw/products.hpp"
#include "aw/quadrature.hpp"

// Functional calculus f°(X) = Gamma(1/sqrt2) f(Gamma(sqrt2) X) and the
// checks tying it to the forward heat equation: for polynomial data the
// coefficient identities are exact; for bounded analytic data the pairing
// E[u(t,B_t) E(h)] is validated by Monte Carlo against the exact
// coefficient-side computation.

namespace aw {

class Poly1D {
 public:
  Poly1D() = default;  // zero polynomial
  explicit Poly1D(std::vector<double> coeffs);  // c_0 + c_1 x + ...
  static Poly1D monomial(int k, double c = 1.0);

  const std::vector<double>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double operator()(double x) const;
  Poly1D derivative() const;

  friend Poly1D operator+(const Poly1D& p, const Poly1D& q);
  friend Poly1D operator*(const Poly1D& p, const Poly1D& q);
  friend Poly1D operator*(double s, const Poly1D& p);

 private:
  std::vector<double> coeffs_;
};

// Monic Hermite polynomial with parameter t:
// p_{n+1} = x p_n - n t p_{n-1}, p_0 = 1, p_1 = x.
Poly1D hermite_with_parameter(int n, double t);

// Horner composition p(X) under the pointwise product.
ChaosVector poly_of_chaos(const Poly1D& p, const ChaosVector& x);

// f°(X) for polynomial f.
ChaosVector functional_calculus(const Poly1D& p, const ChaosVector& x);

// Exact solution of u_t = 1/2 u_xx with u(0,.) = f, as a polynomial in x:
// x^k -> sum_j C(k,2j) (2j-1)!! t^j x^{k-2j}.
Poly1D heat_solution_poly(const Poly1D& f, double t);

// u(t,x) = E[f(x + sqrt(t) Z)] by Gauss-Hermite quadrature; requires t > 0.
double heat_solution_quadrature(const std::function<double(double)>& f, double t, double x,
                                int nodes);

struct ResidualReport {
  double residual;     // max-coefficient difference between the two routes
  double coeff_scale;  // max |coefficient| across both sides
};

// Residual between the heat-semigroup route poly_of_chaos(u(t,.), B_t) and
// the functional-calculus route f°(B_t); t must be a node of `grid`. The
// order cap is raised to deg f if needed.
ResidualReport heat_representation_residual(const Poly1D& f, const TimeGrid& grid, double t,
                                            int order_cap);

// Residual between u(t,B_t) o v(t,B_t) (anti-Wick, series route) and
// w(t,B_t), where u, v, w solve the heat equation with data f, g, and f g.
ResidualReport heat_product_residual(const Poly1D& f, const Poly1D& g, const TimeGrid& grid,
                                     double t, int order_cap);

struct ExpFunctionalResult {
  double residual;       // exp°{I1(h)} vs exp{int h dB + 1/2 int h^2 ds}
  double tail_bound;     // coefficient-level Taylor tail bound
  double wick_residual;  // exp-Wick counterpart vs the stochastic exponential
};

// Compares exp°{I1(h)} (truncated Taylor functional calculus) with the
// closed form E(h) e^{<h,h>}, and the Wick counterpart exp-diamond{I1(h)}
// with E(h) itself.
ExpFunctionalResult exp_functional_check(const L2Function& h, int taylor_order = 16);

struct McConfig {
  std::int64_t samples = 100000;
  std::uint64_t seed = 42;
  double confidence_sigma = 3.0;
};

// Bounded analytic initial datum: pointwise evaluation plus enough Taylor
// coefficients at 0 for the chaos-side representation and its tail bound.
struct AnalyticFunction {
  std::string name;
  std::function<double(double)> fn;
  std::vector<double> taylor;  // c_0 .. c_{taylor.size()-1}
  int chaos_degree = 16;       // truncation degree used on the chaos side

  static AnalyticFunction cosine(int chaos_degree = 16);
  static AnalyticFunction exponential(int chaos_degree = 16);
};

struct McPairingResult {
  double lhs;         // MC estimate of E[u(t,B_t) E(h)]
  double rhs;         // pair_expectation(f°(B_t), h), exact in coefficients
  double sigma;       // MC standard error of lhs
  double tail_bound;  // Taylor tail bound on the rhs truncation
  std::int64_t samples;
  std::uint64_t seed;
};

McPairingResult mc_pairing_check(const AnalyticFunction& f, const TimeGrid& grid, double t,
                                 const L2Function& h, const McConfig& cfg, int quad_nodes = 40);

}  // namespace aw
