// Reference kernels. Per-sample arithmetic order here is the contract the
// SIMD variants must reproduce lane-for-lane.

#include <cmath>
#include <cstddef>
#include <vector>

#include "aw/kernels.hpp"

namespace aw::kernels {

namespace {

// Samples are processed in chunks so the per-chunk Hermite table stays
// cache-resident: modes x (max_degree+1) x kChunk doubles.
constexpr int kChunk = 256;

void eval_chunk(const PackedChaos& pv, const double* xi, int count, int stride,
                double* values, double* table) {
  const int m = pv.modes;
  const int levels = pv.max_degree + 1;
  // table layout: (mode, degree) plane of `count` lanes.
  for (int i = 0; i < m; ++i) {
    double* plane = table + static_cast<std::ptrdiff_t>(i) * levels * count;
    const double* x = xi + static_cast<std::ptrdiff_t>(i) * stride;
    for (int s = 0; s < count; ++s) plane[s] = 1.0;
    if (levels > 1) {
      for (int s = 0; s < count; ++s) plane[count + s] = x[s];
    }
    for (int d = 2; d < levels; ++d) {
      const double* prev2 = plane + static_cast<std::ptrdiff_t>(d - 2) * count;
      const double* prev1 = plane + static_cast<std::ptrdiff_t>(d - 1) * count;
      double* cur = plane + static_cast<std::ptrdiff_t>(d) * count;
      const double dm1 = static_cast<double>(d - 1);
      for (int s = 0; s < count; ++s) cur[s] = x[s] * prev1[s] - dm1 * prev2[s];
    }
  }
  for (int s = 0; s < count; ++s) values[s] = 0.0;
  for (std::size_t j = 0; j < pv.size(); ++j) {
    const std::uint8_t* row = pv.exponents.data() + j * static_cast<std::size_t>(m);
    const double c = pv.coeffs[j];
    // prod over active modes, accumulated per lane
    static thread_local std::vector<double> prod;
    prod.assign(static_cast<std::size_t>(count), c);
    for (int i = 0; i < m; ++i) {
      const int e = row[i];
      if (e == 0) continue;
      const double* plane =
          table + (static_cast<std::ptrdiff_t>(i) * levels + e) * count;
      for (int s = 0; s < count; ++s) prod[static_cast<std::size_t>(s)] *= plane[s];
    }
    for (int s = 0; s < count; ++s) values[s] += prod[static_cast<std::size_t>(s)];
  }
}

void eval_batch_scalar(const PackedChaos& pv, const double* xi, int count, double* values) {
  const int levels = pv.max_degree + 1;
  std::vector<double> table(static_cast<std::size_t>(pv.modes) * levels * kChunk);
  for (int base = 0; base < count; base += kChunk) {
    const int n = std::min(kChunk, count - base);
    eval_chunk(pv, xi + base, n, count, values + base, table.data());
  }
}

void dot_batch_scalar(const double* w, int modes, const double* xi, int count, double* out) {
  for (int s = 0; s < count; ++s) out[s] = 0.0;
  for (int i = 0; i < modes; ++i) {
    const double wi = w[i];
    const double* x = xi + static_cast<std::ptrdiff_t>(i) * count;
    for (int s = 0; s < count; ++s) out[s] += wi * x[s];
  }
}

double sum_scalar(const double* v, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += v[i];
  return acc;
}

double sum_abs_scalar(const double* v, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += std::abs(v[i]);
  return acc;
}

double sum_sq_scalar(const double* v, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += v[i] * v[i];
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{
      "scalar", eval_batch_scalar, dot_batch_scalar, sum_scalar, sum_abs_scalar, sum_sq_scalar,
  };
  return ops;
}

}  // namespace aw::kernels
