#include "aw/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aw/combinatorics.hpp"

namespace aw {

namespace {

void require_compatible(const ChaosVector& x, const ChaosVector& y, const char* op) {
  if (x.modes() != y.modes()) {
    throw std::invalid_argument(std::string(op) + ": mode count mismatch");
  }
}

int shared_cap(const ChaosVector& x, const ChaosVector& y) {
  return std::min(x.order_cap(), y.order_cap());
}

// Expands one pair of Hermite monomials mode by mode, pruning every branch
// whose minimal reachable total degree exceeds the cap.
class PairwiseExpansion {
 public:
  PairwiseExpansion(int modes, int cap, std::map<MultiIndex, double, GradedLexLess>& acc)
      : modes_(modes), cap_(cap), acc_(acc), gamma_(static_cast<std::size_t>(modes)),
        suffix_min_(static_cast<std::size_t>(modes) + 1) {}

  bool truncated() const { return truncated_; }

  void expand(const MultiIndex& a, const MultiIndex& b, double coeff) {
    a_ = &a;
    b_ = &b;
    suffix_min_[static_cast<std::size_t>(modes_)] = 0;
    for (int i = modes_ - 1; i >= 0; --i) {
      suffix_min_[static_cast<std::size_t>(i)] =
          suffix_min_[static_cast<std::size_t>(i) + 1] + std::abs(a[i] - b[i]);
    }
    descend(0, 0, coeff);
  }

 private:
  void descend(int mode, int degree, double coeff) {
    if (mode == modes_) {
      acc_[MultiIndex::from_exponents(gamma_)] += coeff;
      return;
    }
    const int a = (*a_)[mode];
    const int b = (*b_)[mode];
    const int kmax = std::min(a, b);
    for (int k = 0; k <= kmax; ++k) {
      const int g = a + b - 2 * k;
      const int next_degree = degree + g;
      if (next_degree + suffix_min_[static_cast<std::size_t>(mode) + 1] > cap_) {
        truncated_ = true;
        continue;
      }
      gamma_[static_cast<std::size_t>(mode)] = g;
      descend(mode + 1, next_degree, coeff * hermite_linearization(a, b, k));
    }
  }

  int modes_;
  int cap_;
  std::map<MultiIndex, double, GradedLexLess>& acc_;
  const MultiIndex* a_ = nullptr;
  const MultiIndex* b_ = nullptr;
  std::vector<int> gamma_;
  std::vector<int> suffix_min_;
  bool truncated_ = false;
};

}  // namespace

ChaosVector::ChaosVector(int modes, int order_cap) : modes_(modes), order_cap_(order_cap) {
  if (modes < 1) throw std::invalid_argument("ChaosVector: need at least one mode");
  if (order_cap < 0) throw std::invalid_argument("ChaosVector: negative order cap");
}

double ChaosVector::coeff(const MultiIndex& idx) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                             [](const Term& t, const MultiIndex& k) {
                               return graded_lex_less(t.index, k);
                             });
  if (it != terms_.end() && it->index == idx) return it->coeff;
  return 0.0;
}

double ChaosVector::eval(std::span<const double> xi) const {
  if (static_cast<int>(xi.size()) != modes_) {
    throw std::invalid_argument("ChaosVector::eval: sample length mismatch");
  }
  const int maxd = degree();
  // Hermite table, mode-major: h[d * modes + i] = h_d(xi_i).
  std::vector<double> h(static_cast<std::size_t>(maxd + 1) * modes_);
  for (int i = 0; i < modes_; ++i) h[static_cast<std::size_t>(i)] = 1.0;
  if (maxd >= 1) {
    for (int i = 0; i < modes_; ++i) {
      h[static_cast<std::size_t>(modes_ + i)] = xi[static_cast<std::size_t>(i)];
    }
  }
  for (int d = 2; d <= maxd; ++d) {
    for (int i = 0; i < modes_; ++i) {
      h[static_cast<std::size_t>(d) * modes_ + i] =
          xi[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(d - 1) * modes_ + i] -
          (d - 1) * h[static_cast<std::size_t>(d - 2) * modes_ + i];
    }
  }
  double acc = 0.0;
  for (const Term& t : terms_) {
    double v = t.coeff;
    for (int i = 0; i < modes_; ++i) {
      const int e = t.index[i];
      if (e > 0) v *= h[static_cast<std::size_t>(e) * modes_ + i];
    }
    acc += v;
  }
  return acc;
}

double ChaosVector::norm2() const {
  double acc = 0.0;
  for (const Term& t : terms_) acc += t.index.factorial() * t.coeff * t.coeff;
  return std::sqrt(acc);
}

ChaosVector::Builder::Builder(int modes, int order_cap) : modes_(modes), order_cap_(order_cap) {
  if (modes < 1) throw std::invalid_argument("ChaosVector: need at least one mode");
  if (order_cap < 0) throw std::invalid_argument("ChaosVector: negative order cap");
}

ChaosVector::Builder& ChaosVector::Builder::add(const MultiIndex& idx, double c) {
  if (idx.modes() != modes_) throw std::invalid_argument("ChaosVector: index mode count mismatch");
  if (idx.degree() > order_cap_) throw std::invalid_argument("ChaosVector: index beyond order cap");
  acc_[idx] += c;
  return *this;
}

ChaosVector::Builder& ChaosVector::Builder::set_truncated(bool flag) {
  truncated_ = flag;
  return *this;
}

ChaosVector ChaosVector::Builder::build() && {
  ChaosVector out(modes_, order_cap_);
  out.truncated_ = truncated_;
  out.terms_.reserve(acc_.size());
  for (auto& [idx, c] : acc_) {
    if (c != 0.0) out.terms_.push_back(Term{idx, c});
  }
  return out;
}

double hermite_value(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite_value: negative degree");
  double prev = 1.0;
  if (k == 0) return prev;
  double cur = x;
  for (int d = 1; d < k; ++d) {
    const double next = x * cur - d * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ChaosVector constant(double c, int modes, int order_cap) {
  ChaosVector::Builder b(modes, order_cap);
  b.add(MultiIndex(modes), c);
  return std::move(b).build();
}

ChaosVector gaussian_of(const L2Function& f, int order_cap) {
  if (order_cap < 1) throw std::invalid_argument("gaussian_of: order cap must be at least 1");
  const int m = f.grid().cells();
  ChaosVector::Builder b(m, order_cap);
  for (int i = 0; i < m; ++i) {
    const double c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c != 0.0) b.add(MultiIndex::unit(m, i), c);
  }
  return std::move(b).build();
}

double eval(const ChaosVector& x, std::span<const double> xi) { return x.eval(xi); }

ChaosVector pointwise_product(const ChaosVector& x, const ChaosVector& y) {
  require_compatible(x, y, "pointwise_product");
  const int cap = shared_cap(x, y);
  std::map<MultiIndex, double, GradedLexLess> acc;
  PairwiseExpansion expansion(x.modes(), cap, acc);
  for (const Term& tx : x.terms()) {
    for (const Term& ty : y.terms()) {
      expansion.expand(tx.index, ty.index, tx.coeff * ty.coeff);
    }
  }
  ChaosVector::Builder b(x.modes(), cap);
  for (const auto& [idx, c] : acc) b.add(idx, c);
  b.set_truncated(expansion.truncated() || x.truncated() || y.truncated());
  return std::move(b).build();
}

ChaosVector wick_product(const ChaosVector& x, const ChaosVector& y) {
  require_compatible(x, y, "wick_product");
  const int cap = shared_cap(x, y);
  ChaosVector::Builder b(x.modes(), cap);
  bool truncated = x.truncated() || y.truncated();
  for (const Term& tx : x.terms()) {
    for (const Term& ty : y.terms()) {
      if (tx.index.degree() + ty.index.degree() > cap) {
        truncated = true;
        continue;
      }
      b.add(tx.index.plus(ty.index), tx.coeff * ty.coeff);
    }
  }
  b.set_truncated(truncated);
  return std::move(b).build();
}

ChaosVector wick_power(const ChaosVector& x, int n) {
  if (n < 0) throw std::invalid_argument("wick_power: negative power");
  ChaosVector out = constant(1.0, x.modes(), x.order_cap());
  for (int i = 0; i < n; ++i) out = wick_product(out, x);
  return out;
}

ChaosVector gamma_scale(const ChaosVector& x, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("gamma_scale: lambda must be positive");
  ChaosVector::Builder b(x.modes(), x.order_cap());
  for (const Term& t : x.terms()) b.add(t.index, t.coeff * pow_int(lambda, t.index.degree()));
  b.set_truncated(x.truncated());
  return std::move(b).build();
}

double norm_g(const ChaosVector& x, double lambda) {
  if (!(lambda >= 1.0)) throw std::invalid_argument("norm_g: lambda must be at least 1");
  const double lambda_sq = lambda * lambda;
  double acc = 0.0;
  for (const Term& t : x.terms()) {
    acc += t.index.factorial() * pow_int(lambda_sq, t.index.degree()) * t.coeff * t.coeff;
  }
  return std::sqrt(acc);
}

ChaosVector stochastic_exponential(const L2Function& f, int order_cap) {
  const int m = f.grid().cells();
  std::vector<int> support;
  for (int i = 0; i < m; ++i) {
    if (f.coeffs()[static_cast<std::size_t>(i)] != 0.0) support.push_back(i);
  }
  ChaosVector::Builder b(m, order_cap);
  // Depth-first over the support: coefficient of H_alpha is prod f_i^{a_i}/a_i!.
  std::vector<int> exps(static_cast<std::size_t>(m), 0);
  auto descend = [&](auto&& self, std::size_t pos, int degree_left, double coeff) -> void {
    if (pos == support.size()) {
      b.add(MultiIndex::from_exponents(exps), coeff);
      return;
    }
    const int mode = support[pos];
    const double fi = f.coeffs()[static_cast<std::size_t>(mode)];
    double factor = 1.0;
    for (int a = 0; a <= degree_left; ++a) {
      exps[static_cast<std::size_t>(mode)] = a;
      self(self, pos + 1, degree_left - a, coeff * factor);
      factor *= fi / (a + 1);
    }
    exps[static_cast<std::size_t>(mode)] = 0;
  };
  descend(descend, 0, order_cap, 1.0);
  return std::move(b).build();
}

double expectation(const ChaosVector& x) { return x.coeff(MultiIndex(x.modes())); }

double pair_expectation(const ChaosVector& x, const L2Function& h) {
  if (x.modes() != h.grid().cells()) {
    throw std::invalid_argument("pair_expectation: mode count mismatch");
  }
  double acc = 0.0;
  for (const Term& t : x.terms()) {
    double v = t.coeff;
    for (int i = 0; i < x.modes(); ++i) {
      const int e = t.index[i];
      if (e > 0) v *= pow_int(h.coeffs()[static_cast<std::size_t>(i)], e);
    }
    acc += v;
  }
  return acc;
}

ChaosVector operator+(const ChaosVector& x, const ChaosVector& y) {
  require_compatible(x, y, "ChaosVector sum");
  ChaosVector::Builder b(x.modes(), std::max(x.order_cap(), y.order_cap()));
  for (const Term& t : x.terms()) b.add(t.index, t.coeff);
  for (const Term& t : y.terms()) b.add(t.index, t.coeff);
  b.set_truncated(x.truncated() || y.truncated());
  return std::move(b).build();
}

ChaosVector operator-(const ChaosVector& x, const ChaosVector& y) {
  return x + (-1.0 * y);
}

ChaosVector operator*(double s, const ChaosVector& x) {
  ChaosVector::Builder b(x.modes(), x.order_cap());
  for (const Term& t : x.terms()) b.add(t.index, s * t.coeff);
  b.set_truncated(x.truncated());
  return std::move(b).build();
}

double max_abs_coeff(const ChaosVector& x) {
  double acc = 0.0;
  for (const Term& t : x.terms()) acc = std::max(acc, std::abs(t.coeff));
  return acc;
}

double max_abs_coeff_diff(const ChaosVector& x, const ChaosVector& y) {
  double acc = 0.0;
  auto ix = x.terms().begin();
  auto iy = y.terms().begin();
  while (ix != x.terms().end() || iy != y.terms().end()) {
    if (iy == y.terms().end() ||
        (ix != x.terms().end() && graded_lex_less(ix->index, iy->index))) {
      acc = std::max(acc, std::abs(ix->coeff));
      ++ix;
    } else if (ix == x.terms().end() || graded_lex_less(iy->index, ix->index)) {
      acc = std::max(acc, std::abs(iy->coeff));
      ++iy;
    } else {
      acc = std::max(acc, std::abs(ix->coeff - iy->coeff));
      ++ix;
      ++iy;
    }
  }
  return acc;
}

bool approx_equal(const ChaosVector& x, const ChaosVector& y, double rel_tol, double abs_tol) {
  auto close = [&](double a, double b) {
    const double d = std::abs(a - b);
    return d <= abs_tol || d <= rel_tol * std::max(std::abs(a), std::abs(b));
  };
  auto ix = x.terms().begin();
  auto iy = y.terms().begin();
  while (ix != x.terms().end() || iy != y.terms().end()) {
    if (iy == y.terms().end() ||
        (ix != x.terms().end() && graded_lex_less(ix->index, iy->index))) {
      if (!close(ix->coeff, 0.0)) return false;
      ++ix;
    } else if (ix == x.terms().end() || graded_lex_less(iy->index, ix->index)) {
      if (!close(0.0, iy->coeff)) return false;
      ++iy;
    } else {
      if (!close(ix->coeff, iy->coeff)) return false;
      ++ix;
      ++iy;
    }
  }
  return true;
}

}  // namespace aw
