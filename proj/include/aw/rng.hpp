#pragma once

#include <cstdint>
#include <functional>
#include <random>

// Seedable, splittable sample streams for the Monte Carlo checks. Stream b
// of a run is an mt19937_64 engine seeded via splitmix64 from (seed, b);
// normals come from Box-Muller with a fixed uniform consumption pattern, so
// the draw at (seed, block, offset) never depends on anything else.

namespace aw::rng {

inline constexpr int kBlockSamples = 4096;

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block);

// Uniform on (0,1]; exactly one engine draw.
double uniform01(std::mt19937_64& engine);

// Uniform on {0,...,n-1}; exactly one engine draw.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n);

// Standard normal draws; consumes engine draws in pairs.
class NormalSource {
 public:
  explicit NormalSource(std::mt19937_64& engine) : engine_(engine) {}
  double next();

 private:
  std::mt19937_64& engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Writes `count` samples of `modes` normals, mode-major: xi[i*count + s]
// holds mode i of sample s. The logical draw order is sample-major, so a
// sample's normals do not depend on `count`.
void fill_normal_block(std::uint64_t seed, std::uint64_t block, int modes, int count,
                       double* xi);

struct McStats {
  double sum = 0.0;
  double sum_sq = 0.0;
  double sum_abs = 0.0;
  std::int64_t n = 0;

  double mean() const { return n > 0 ? sum / static_cast<double>(n) : 0.0; }
  double mean_abs() const { return n > 0 ? sum_abs / static_cast<double>(n) : 0.0; }
  // Standard error of the mean.
  double std_error() const;
  // Standard error of the mean of |v|.
  double std_error_abs() const;
};

// Runs `fill_values(xi, count, values)` over consecutive blocks of the
// stream and accumulates per-block partials in block order. Deterministic
// for a fixed (seed, samples) on a fixed build.
McStats run_mc(std::uint64_t seed, std::int64_t samples, int modes,
               const std::function<void(const double* xi, int count, double* values)>&
                   fill_values);

}  // namespace aw::rng
