#pragma once

#include <vector>

#include "aw/chaos.hpp"

// Hida-Malliavin derivatives in the finite basis. The derivative at time t
// is D_t X = sum_i e_i(t) A_i X with A_i the annihilation operator of mode
// i; orthonormality of the basis collapses every time integral of the
// calculus to an exact mode sum.

namespace aw {

struct DerivativeField {
  std::vector<ChaosVector> components;  // component i = A_i X
};

// A_i: H_alpha -> alpha_i H_{alpha - e_i}; zero-based mode index.
ChaosVector annihilate(const ChaosVector& x, int mode);

// A^beta, applying annihilate beta_i times in mode i:
// H_alpha -> (prod_i alpha_i!/(alpha_i-beta_i)!) H_{alpha-beta}.
ChaosVector annihilate_multi(const ChaosVector& x, const MultiIndex& beta);

DerivativeField derivative_field(const ChaosVector& x);

// int D^n X . D^n Y dt over [0,T]^n as the exact mode sum
// sum_{|beta|=n} (n!/beta!) (A^beta X)(A^beta Y); n = 0 gives the plain
// pointwise product.
ChaosVector iterated_pairing(const ChaosVector& x, const ChaosVector& y, int n);

struct NormIdentity {
  double derivative_series;  // sum_n (1/n!) E[ int |D^n X|^2 dt ]
  double gamma_norm_sq;      // |Gamma(sqrt 2) X|_2^2
};

NormIdentity smoothness_norm_identity(const ChaosVector& x);

}  // namespace aw
