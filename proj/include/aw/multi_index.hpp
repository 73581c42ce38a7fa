#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace aw {

// Exponent vector over the Gaussian modes; immutable value type indexing
// one product Hermite functional H_alpha.
class MultiIndex {
 public:
  explicit MultiIndex(int modes);
  MultiIndex(std::initializer_list<int> exponents);
  static MultiIndex unit(int modes, int mode);
  static MultiIndex from_exponents(const std::vector<int>& exponents);

  int modes() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int operator[](int mode) const { return exponents_[static_cast<std::size_t>(mode)]; }

  // alpha! as a double (exact integer within the supported degree range).
  double factorial() const;

  bool is_zero() const { return degree_ == 0; }
  // Component-wise comparison: *this <= other in every mode.
  bool dominated_by(const MultiIndex& other) const;

  MultiIndex plus(const MultiIndex& other) const;
  MultiIndex with(int mode, int value) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.exponents_ == b.exponents_;
  }

  friend bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<std::uint8_t> exponents_;
  int degree_ = 0;
};

// Degree first, then lexicographic on the exponent vector. Total order used
// for iteration and serialization everywhere.
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return graded_lex_less(a, b);
  }
};

}  // namespace aw
