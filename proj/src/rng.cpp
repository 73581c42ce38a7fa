#include "aw/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "aw/kernels.hpp"

namespace aw::rng {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (stream + 1));
  std::uint64_t out = splitmix64(state);
  out ^= splitmix64(state);
  return out;
}

std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
  return std::mt19937_64(mix(seed, block));
}

double uniform01(std::mt19937_64& engine) {
  // (0,1]: 53 significant bits, never zero.
  return (static_cast<double>(engine() >> 11) + 1.0) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(engine()) * n) >> 64);
}

double NormalSource::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01(engine_);
  const double u2 = uniform01(engine_);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

void fill_normal_block(std::uint64_t seed, std::uint64_t block, int modes, int count,
                       double* xi) {
  std::mt19937_64 engine = block_engine(seed, block);
  NormalSource normals(engine);
  for (int s = 0; s < count; ++s) {
    for (int i = 0; i < modes; ++i) {
      xi[static_cast<std::ptrdiff_t>(i) * count + s] = normals.next();
    }
  }
}

double McStats::std_error() const {
  if (n < 2) return 0.0;
  const double m = mean();
  const double var = std::max(0.0, sum_sq / static_cast<double>(n) - m * m);
  return std::sqrt(var / static_cast<double>(n));
}

double McStats::std_error_abs() const {
  if (n < 2) return 0.0;
  const double m = mean_abs();
  // E[v^2] = E[|v|^2], so sum_sq serves both estimators.
  const double var = std::max(0.0, sum_sq / static_cast<double>(n) - m * m);
  return std::sqrt(var / static_cast<double>(n));
}

McStats run_mc(std::uint64_t seed, std::int64_t samples, int modes,
               const std::function<void(const double* xi, int count, double* values)>&
                   fill_values) {
  if (samples < 1) throw std::invalid_argument("run_mc: need at least one sample");
  const auto& ops = kernels::active_ops();
  std::vector<double> xi(static_cast<std::size_t>(modes) * kBlockSamples);
  std::vector<double> values(kBlockSamples);
  McStats stats;
  std::int64_t remaining = samples;
  for (std::uint64_t block = 0; remaining > 0; ++block) {
    const int count = static_cast<int>(std::min<std::int64_t>(kBlockSamples, remaining));
    fill_normal_block(seed, block, modes, count, xi.data());
    fill_values(xi.data(), count, values.data());
    stats.sum += ops.sum(values.data(), count);
    stats.sum_sq += ops.sum_sq(values.data(), count);
    stats.sum_abs += ops.sum_abs(values.data(), count);
    stats.n += count;
    remaining -= count;
  }
  return stats;
}

}  // namespace aw::rng
