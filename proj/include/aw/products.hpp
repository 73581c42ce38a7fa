#pragma once

#include <cstdint>
#include <vector>

#include "aw/chaos.hpp"
#include "aw/malliavin.hpp"

// The product family on chaos vectors: the phi-indexed derivative-pairing
// products, the anti-Wick product by its series definition and by its
// second-quantization representation, and the conversion formulas between
// Wick and anti-Wick. The two anti-Wick routes are independent code paths
// on purpose; their agreement is the strongest correctness check the
// library has.

namespace aw {

// Truncated Taylor coefficients (a_0, ..., a_K) of an analytic phi with
// phi(0) = 1.
class PhiSeries {
 public:
  explicit PhiSeries(std::vector<double> coeffs);

  static PhiSeries one();                              // phi(x) = 1
  static PhiSeries affine();                           // phi(x) = 1 + x
  static PhiSeries exponential(double alpha, int order);  // a_k = alpha^k/k!
  // Exponential series with order chosen so |alpha x|^{K+1}/(K+1)! < tol
  // for |x| <= max_abs_x.
  static PhiSeries exponential_to_tolerance(double alpha, double max_abs_x, double tol);

  const std::vector<double>& coeffs() const { return coeffs_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  double operator()(double x) const;

 private:
  std::vector<double> coeffs_;
};

// X o_phi Y = sum_n a_n int D^n X . D^n Y dt. The sum stops at
// min(order, deg X, deg Y); higher pairings vanish, so the truncation is
// exact.
ChaosVector circle_phi(const ChaosVector& x, const ChaosVector& y, const PhiSeries& phi);

// Anti-Wick by the defining series (phi = exp).
ChaosVector anti_wick_series(const ChaosVector& x, const ChaosVector& y);

// Anti-Wick via Gamma(1/sqrt2)(Gamma(sqrt2)X . Gamma(sqrt2)Y).
ChaosVector anti_wick_gamma(const ChaosVector& x, const ChaosVector& y);

struct ProbeSides {
  double lhs;
  double rhs;
};

// Scalar two-sided probe of associativity on exponential triples:
// lhs = phi(<f,g>) phi(<f+g,h>), rhs = phi(<f,g+h>) phi(<g,h>).
// Equality for all triples is equivalent to associativity of o_phi.
ProbeSides associativity_probe(const PhiSeries& phi, const L2Function& f, const L2Function& g,
                               const L2Function& h);

// X o Y rebuilt from Wick products: sum_n (2^n/n!) int D^n X <> D^n Y dt.
ChaosVector wick_to_antiwick(const ChaosVector& x, const ChaosVector& y);

// X <> Y rebuilt from anti-Wick products:
// sum_n ((-2)^n/n!) int D^n X o D^n Y dt.
ChaosVector antiwick_to_wick(const ChaosVector& x, const ChaosVector& y);

struct L1BoundResult {
  double mc_l1;       // Monte Carlo estimate of E|X o Y|
  double bound;       // |X|_{G_sqrt2} |Y|_{G_sqrt2}
  double std_error;   // MC standard error of mc_l1
  std::int64_t samples;
  std::uint64_t seed;
  bool truncated;     // the sampled product lost terms to the order cap
};

L1BoundResult l1_bound_check(const ChaosVector& x, const ChaosVector& y, std::int64_t samples,
                             std::uint64_t seed);

}  // namespace aw
