#pragma once

#include <map>
#include <span>
#include <vector>

#include "aw/basis.hpp"
#include "aw/multi_index.hpp"

// Sparse truncated Wiener-Ito chaos expansions over m Gaussian modes:
// X = sum_alpha c_alpha H_alpha with H_alpha(xi) = prod_i h_{alpha_i}(xi_i)
// and h_k the monic probabilists' Hermite polynomial, E[h_k(xi)^2] = k!.

namespace aw {

struct Term {
  MultiIndex index;
  double coeff;
};

class ChaosVector {
 public:
  // Zero vector.
  ChaosVector(int modes, int order_cap);

  int modes() const { return modes_; }
  int order_cap() const { return order_cap_; }

  // Terms sorted in graded-lex order; zero coefficients are not stored.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nnz() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Max total degree of a stored index; 0 for the zero vector.
  int degree() const { return terms_.empty() ? 0 : terms_.back().index.degree(); }

  // True when some operation in this value's history dropped terms beyond
  // the order cap.
  bool truncated() const { return truncated_; }

  double coeff(const MultiIndex& idx) const;

  // sum_alpha c_alpha prod_i h_{alpha_i}(xi_i).
  double eval(std::span<const double> xi) const;

  // L2(Omega) norm: (sum_alpha alpha! c_alpha^2)^{1/2}.
  double norm2() const;

  class Builder {
   public:
    Builder(int modes, int order_cap);
    Builder& add(const MultiIndex& idx, double c);
    Builder& set_truncated(bool flag = true);
    ChaosVector build() &&;

   private:
    int modes_;
    int order_cap_;
    bool truncated_ = false;
    std::map<MultiIndex, double, GradedLexLess> acc_;
  };

 private:
  int modes_;
  int order_cap_;
  bool truncated_ = false;
  std::vector<Term> terms_;
};

// Monic probabilists' Hermite value h_k(x) by three-term recurrence.
double hermite_value(int k, double x);

ChaosVector constant(double c, int modes, int order_cap);

// First-chaos element I1(f) = sum_i f_i xi_i; requires order_cap >= 1.
ChaosVector gaussian_of(const L2Function& f, int order_cap);

double eval(const ChaosVector& x, std::span<const double> xi);

// Coefficient-level product via per-mode Hermite linearization
// h_a h_b = sum_k k! C(a,k) C(b,k) h_{a+b-2k}; terms beyond the order cap
// are dropped and flagged.
ChaosVector pointwise_product(const ChaosVector& x, const ChaosVector& y);

// H_alpha <> H_beta = H_{alpha+beta}.
ChaosVector wick_product(const ChaosVector& x, const ChaosVector& y);
ChaosVector wick_power(const ChaosVector& x, int n);

// Second quantization with scalar lambda > 0: coefficient of alpha scaled
// by lambda^{|alpha|}.
ChaosVector gamma_scale(const ChaosVector& x, double lambda);

// (sum_alpha alpha! lambda^{2|alpha|} c_alpha^2)^{1/2}; requires lambda >= 1.
double norm_g(const ChaosVector& x, double lambda);

// Truncation of exp{ int f dB - 1/2 int f^2 }: coefficient of H_alpha is
// f^alpha / alpha! over all |alpha| <= order_cap.
ChaosVector stochastic_exponential(const L2Function& f, int order_cap);

double expectation(const ChaosVector& x);

// E[X E(h)] = sum_alpha c_alpha h^alpha; exact for finite-degree X.
double pair_expectation(const ChaosVector& x, const L2Function& h);

ChaosVector operator+(const ChaosVector& x, const ChaosVector& y);
ChaosVector operator-(const ChaosVector& x, const ChaosVector& y);
ChaosVector operator*(double s, const ChaosVector& x);

double max_abs_coeff(const ChaosVector& x);
double max_abs_coeff_diff(const ChaosVector& x, const ChaosVector& y);

// |a-b| <= abs_tol or |a-b| <= rel_tol max(|a|,|b|), coefficient-wise.
bool approx_equal(const ChaosVector& x, const ChaosVector& y, double rel_tol = 1e-9,
                  double abs_tol = 1e-12);

}  // namespace aw
