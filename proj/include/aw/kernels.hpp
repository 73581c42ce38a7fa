#pragma once

#include <cstdint>
#include <vector>

// Batch evaluation kernels for the Monte Carlo paths. The hot loops are
// data-parallel across samples; a scalar reference implementation defines
// the semantics and an AVX2 variant is selected at runtime when the CPU
// supports it. Reductions may round differently between variants; per-sample
// values of eval_batch/dot_batch are computed in lane-identical order.

namespace aw {
class ChaosVector;
}

namespace aw::kernels {

// Flattened chaos vector: exponent rows (nnz x modes) plus coefficients.
struct PackedChaos {
  int modes = 0;
  int max_degree = 0;
  std::vector<std::uint8_t> exponents;
  std::vector<double> coeffs;

  std::size_t size() const { return coeffs.size(); }
};

PackedChaos pack(const ChaosVector& x);

struct Ops {
  const char* name;

  // values[s] = sum_j coeffs[j] prod_i h_{e(j,i)}(xi[i*count + s]).
  // xi is mode-major (SoA): mode i occupies xi[i*count .. i*count+count).
  void (*eval_batch)(const PackedChaos& pv, const double* xi, int count, double* values);

  // out[s] = sum_i w[i] xi[i*count + s].
  void (*dot_batch)(const double* w, int modes, const double* xi, int count, double* out);

  double (*sum)(const double* v, int n);
  double (*sum_abs)(const double* v, int n);
  double (*sum_sq)(const double* v, int n);
};

const Ops& scalar_ops();

// nullptr when the build or the CPU lacks AVX2.
const Ops* avx2_ops();

// Runtime-selected variant; the AW_KERNELS environment variable
// ("scalar" or "avx2") overrides the automatic choice.
const Ops& active_ops();

}  // namespace aw::kernels
