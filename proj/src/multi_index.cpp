#include "aw/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "aw/combinatorics.hpp"

namespace aw {

namespace {
constexpr int kMaxExponent = 255;
}

MultiIndex::MultiIndex(int modes) {
  if (modes < 1) throw std::invalid_argument("MultiIndex: need at least one mode");
  exponents_.assign(static_cast<std::size_t>(modes), 0);
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents) {
  if (exponents.size() == 0) throw std::invalid_argument("MultiIndex: need at least one mode");
  exponents_.reserve(exponents.size());
  for (int e : exponents) {
    if (e < 0 || e > kMaxExponent) throw std::invalid_argument("MultiIndex: exponent out of range");
    exponents_.push_back(static_cast<std::uint8_t>(e));
    degree_ += e;
  }
}

MultiIndex MultiIndex::from_exponents(const std::vector<int>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("MultiIndex: need at least one mode");
  MultiIndex idx(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const int e = exponents[i];
    if (e < 0 || e > kMaxExponent) throw std::invalid_argument("MultiIndex: exponent out of range");
    idx.exponents_[i] = static_cast<std::uint8_t>(e);
    idx.degree_ += e;
  }
  return idx;
}

MultiIndex MultiIndex::unit(int modes, int mode) {
  MultiIndex idx(modes);
  if (mode < 0 || mode >= modes) throw std::invalid_argument("MultiIndex::unit: mode out of range");
  idx.exponents_[static_cast<std::size_t>(mode)] = 1;
  idx.degree_ = 1;
  return idx;
}

double MultiIndex::factorial() const {
  double acc = 1.0;
  for (std::uint8_t e : exponents_) {
    if (e > 1) acc *= aw::factorial(e);
  }
  return acc;
}

bool MultiIndex::dominated_by(const MultiIndex& other) const {
  if (exponents_.size() != other.exponents_.size()) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
  if (modes() != other.modes()) throw std::invalid_argument("MultiIndex::plus: mode count mismatch");
  MultiIndex out(*this);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const int e = exponents_[i] + other.exponents_[i];
    if (e > kMaxExponent) throw std::invalid_argument("MultiIndex::plus: exponent overflow");
    out.exponents_[i] = static_cast<std::uint8_t>(e);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

MultiIndex MultiIndex::with(int mode, int value) const {
  if (mode < 0 || mode >= modes()) throw std::invalid_argument("MultiIndex::with: mode out of range");
  if (value < 0 || value > kMaxExponent) throw std::invalid_argument("MultiIndex::with: exponent out of range");
  MultiIndex out(*this);
  out.degree_ += value - out.exponents_[static_cast<std::size_t>(mode)];
  out.exponents_[static_cast<std::size_t>(mode)] = static_cast<std::uint8_t>(value);
  return out;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  return std::lexicographical_compare(a.exponents_.begin(), a.exponents_.end(),
                                      b.exponents_.begin(), b.exponents_.end());
}

}  // namespace aw
