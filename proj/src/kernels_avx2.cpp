// AVX2 variant of the batch kernels. Per-sample arithmetic matches the
// scalar reference lane for lane (mul/add only, no FMA contraction), so the
// equivalence test can require bit-identical eval/dot values. Reductions
// use a vector accumulator and may round differently from the reference.

#include "aw/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <vector>

namespace aw::kernels {

namespace {

constexpr int kChunk = 256;

inline __m256d abs_pd(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(v, mask);
}

void eval_chunk_avx2(const PackedChaos& pv, const double* xi, int count, int stride,
                     double* values, double* table) {
  const int m = pv.modes;
  const int levels = pv.max_degree + 1;
  const int vec_end = count & ~3;
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
      const __m256d vdm1 = _mm256_set1_pd(dm1);
      int s = 0;
      for (; s < vec_end; s += 4) {
        const __m256d vx = _mm256_loadu_pd(x + s);
        const __m256d v1 = _mm256_loadu_pd(prev1 + s);
        const __m256d v2 = _mm256_loadu_pd(prev2 + s);
        _mm256_storeu_pd(cur + s,
                         _mm256_sub_pd(_mm256_mul_pd(vx, v1), _mm256_mul_pd(vdm1, v2)));
      }
      for (; s < count; ++s) cur[s] = x[s] * prev1[s] - dm1 * prev2[s];
    }
  }
  for (int s = 0; s < count; ++s) values[s] = 0.0;
  static thread_local std::vector<double> prod_storage;
  prod_storage.assign(static_cast<std::size_t>(count), 0.0);
  double* prod = prod_storage.data();
  for (std::size_t j = 0; j < pv.size(); ++j) {
    const std::uint8_t* row = pv.exponents.data() + j * static_cast<std::size_t>(m);
    const double c = pv.coeffs[j];
    for (int s = 0; s < count; ++s) prod[s] = c;
    for (int i = 0; i < m; ++i) {
      const int e = row[i];
      if (e == 0) continue;
      const double* plane = table + (static_cast<std::ptrdiff_t>(i) * levels + e) * count;
      int s = 0;
      for (; s < vec_end; s += 4) {
        _mm256_storeu_pd(prod + s,
                         _mm256_mul_pd(_mm256_loadu_pd(prod + s), _mm256_loadu_pd(plane + s)));
      }
      for (; s < count; ++s) prod[s] *= plane[s];
    }
    int s = 0;
    for (; s < vec_end; s += 4) {
      _mm256_storeu_pd(values + s,
                       _mm256_add_pd(_mm256_loadu_pd(values + s), _mm256_loadu_pd(prod + s)));
    }
    for (; s < count; ++s) values[s] += prod[s];
  }
}

void eval_batch_avx2(const PackedChaos& pv, const double* xi, int count, double* values) {
  const int levels = pv.max_degree + 1;
  std::vector<double> table(static_cast<std::size_t>(pv.modes) * levels * kChunk);
  for (int base = 0; base < count; base += kChunk) {
    const int n = std::min(kChunk, count - base);
    eval_chunk_avx2(pv, xi + base, n, count, values + base, table.data());
  }
}

void dot_batch_avx2(const double* w, int modes, const double* xi, int count, double* out) {
  for (int s = 0; s < count; ++s) out[s] = 0.0;
  const int vec_end = count & ~3;
  for (int i = 0; i < modes; ++i) {
    const double wi = w[i];
    const double* x = xi + static_cast<std::ptrdiff_t>(i) * count;
    const __m256d vw = _mm256_set1_pd(wi);
    int s = 0;
    for (; s < vec_end; s += 4) {
      const __m256d acc =
          _mm256_add_pd(_mm256_loadu_pd(out + s), _mm256_mul_pd(vw, _mm256_loadu_pd(x + s)));
      _mm256_storeu_pd(out + s, acc);
    }
    for (; s < count; ++s) out[s] += wi * x[s];
  }
}

double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double sum_avx2(const double* v, int n) {
  __m256d acc = _mm256_setzero_pd();
  const int vec_end = n & ~3;
  int i = 0;
  for (; i < vec_end; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
  double out = horizontal_sum(acc);
  for (; i < n; ++i) out += v[i];
  return out;
}

double sum_abs_avx2(const double* v, int n) {
  __m256d acc = _mm256_setzero_pd();
  const int vec_end = n & ~3;
  int i = 0;
  for (; i < vec_end; i += 4) acc = _mm256_add_pd(acc, abs_pd(_mm256_loadu_pd(v + i)));
  double out = horizontal_sum(acc);
  for (; i < n; ++i) out += std::abs(v[i]);
  return out;
}

double sum_sq_avx2(const double* v, int n) {
  __m256d acc = _mm256_setzero_pd();
  const int vec_end = n & ~3;
  int i = 0;
  for (; i < vec_end; i += 4) {
    const __m256d x = _mm256_loadu_pd(v + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(x, x));
  }
  double out = horizontal_sum(acc);
  for (; i < n; ++i) out += v[i] * v[i];
  return out;
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops ops{
      "avx2", eval_batch_avx2, dot_batch_avx2, sum_avx2, sum_abs_avx2, sum_sq_avx2,
  };
  return &ops;
}

}  // namespace aw::kernels

#endif  // __AVX2__
