#include "aw/malliavin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aw/combinatorics.hpp"

namespace aw {

namespace {

// Component-wise max exponent over the support; the annihilation A^beta
// kills everything unless beta is dominated somewhere, so enumeration can
// be clipped to these caps.
std::vector<int> support_caps(const ChaosVector& x) {
  std::vector<int> caps(static_cast<std::size_t>(x.modes()), 0);
  for (const Term& t : x.terms()) {
    for (int i = 0; i < x.modes(); ++i) {
      caps[static_cast<std::size_t>(i)] = std::max(caps[static_cast<std::size_t>(i)], t.index[i]);
    }
  }
  return caps;
}

void accumulate(ChaosVector::Builder& b, const ChaosVector& x, double scale) {
  for (const Term& t : x.terms()) b.add(t.index, scale * t.coeff);
}

}  // namespace

ChaosVector annihilate(const ChaosVector& x, int mode) {
  if (mode < 0 || mode >= x.modes()) {
    throw std::invalid_argument("annihilate: mode index out of range");
  }
  ChaosVector::Builder b(x.modes(), x.order_cap());
  b.set_truncated(x.truncated());
  for (const Term& t : x.terms()) {
    const int e = t.index[mode];
    if (e == 0) continue;
    b.add(t.index.with(mode, e - 1), static_cast<double>(e) * t.coeff);
  }
  return std::move(b).build();
}

ChaosVector annihilate_multi(const ChaosVector& x, const MultiIndex& beta) {
  if (beta.modes() != x.modes()) {
    throw std::invalid_argument("annihilate_multi: mode count mismatch");
  }
  ChaosVector::Builder b(x.modes(), x.order_cap());
  b.set_truncated(x.truncated());
  for (const Term& t : x.terms()) {
    if (!beta.dominated_by(t.index)) continue;
    double factor = 1.0;
    std::vector<int> exps(static_cast<std::size_t>(x.modes()));
    for (int i = 0; i < x.modes(); ++i) {
      const int a = t.index[i];
      const int k = beta[i];
      exps[static_cast<std::size_t>(i)] = a - k;
      if (k > 0) factor *= falling_factorial(a, k);
    }
    b.add(MultiIndex::from_exponents(exps), factor * t.coeff);
  }
  return std::move(b).build();
}

DerivativeField derivative_field(const ChaosVector& x) {
  DerivativeField field;
  field.components.reserve(static_cast<std::size_t>(x.modes()));
  for (int i = 0; i < x.modes(); ++i) field.components.push_back(annihilate(x, i));
  return field;
}

ChaosVector iterated_pairing(const ChaosVector& x, const ChaosVector& y, int n) {
  if (x.modes() != y.modes()) throw std::invalid_argument("iterated_pairing: mode count mismatch");
  if (n < 0) throw std::invalid_argument("iterated_pairing: negative order");
  if (n == 0) return pointwise_product(x, y);

  const int m = x.modes();
  const int cap = std::min(x.order_cap(), y.order_cap());
  ChaosVector result(m, cap);
  if (n > std::min(x.degree(), y.degree())) return result;

  const std::vector<int> cx = support_caps(x);
  const std::vector<int> cy = support_caps(y);
  std::vector<int> caps(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    caps[static_cast<std::size_t>(i)] =
        std::min(cx[static_cast<std::size_t>(i)], cy[static_cast<std::size_t>(i)]);
  }
  std::vector<int> suffix(static_cast<std::size_t>(m) + 1, 0);
  for (int i = m - 1; i >= 0; --i) {
    suffix[static_cast<std::size_t>(i)] =
        suffix[static_cast<std::size_t>(i) + 1] + caps[static_cast<std::size_t>(i)];
  }

  const double n_fact = factorial(n);
  ChaosVector::Builder b(m, cap);
  bool truncated = x.truncated() || y.truncated();
  std::vector<int> beta(static_cast<std::size_t>(m), 0);
  // All beta with |beta| = n, clipped to the joint support caps.
  auto descend = [&](auto&& self, int mode, int remaining) -> void {
    if (mode == m) {
      if (remaining != 0) return;
      const MultiIndex bidx = MultiIndex::from_exponents(beta);
      const ChaosVector dx = annihilate_multi(x, bidx);
      if (dx.empty()) return;
      const ChaosVector dy = annihilate_multi(y, bidx);
      if (dy.empty()) return;
      const ChaosVector prod = pointwise_product(dx, dy);
      truncated = truncated || prod.truncated();
      accumulate(b, prod, n_fact / bidx.factorial());
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
  b.set_truncated(truncated);
  return std::move(b).build();
}

NormIdentity smoothness_norm_identity(const ChaosVector& x) {
  NormIdentity out{0.0, 0.0};
  const int top = std::min(x.order_cap(), x.degree());
  for (int n = 0; n <= top; ++n) {
    out.derivative_series += expectation(iterated_pairing(x, x, n)) / factorial(n);
  }
  const double r = norm_g(x, std::sqrt(2.0));
  out.gamma_norm_sq = r * r;
  return out;
}

}  // namespace aw
