#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"

#include "aw/chaos.hpp"
#include "aw/kernels.hpp"
#include "aw/rng.hpp"
#include "aw/suites.hpp"

namespace {

std::vector<double> random_batch(std::uint64_t seed, int modes, int count) {
  std::vector<double> xi(static_cast<std::size_t>(modes) * count);
  aw::rng::fill_normal_block(seed, 0, modes, count, xi.data());
  return xi;
}

}  // namespace

TEST_CASE("packing keeps terms and exponents aligned") {
  auto engine = aw::rng::block_engine(101, 0);
  const aw::ChaosVector x = aw::sample_chaos(engine, 4, 8, 5, 7);
  const aw::kernels::PackedChaos pv = aw::kernels::pack(x);
  REQUIRE(pv.size() == x.nnz());
  CHECK(pv.modes == 4);
  for (std::size_t j = 0; j < pv.size(); ++j) {
    CHECK(pv.coeffs[j] == x.terms()[j].coeff);
    int maxd = 0;
    for (int i = 0; i < 4; ++i) {
      CHECK(pv.exponents[j * 4 + static_cast<std::size_t>(i)] == x.terms()[j].index[i]);
      maxd = std::max(maxd, x.terms()[j].index[i]);
    }
    CHECK(maxd <= pv.max_degree);
  }
}

TEST_CASE("scalar batch evaluation matches single-point evaluation") {
  auto engine = aw::rng::block_engine(103, 0);
  const auto& ops = aw::kernels::scalar_ops();
  for (int rep = 0; rep < 5; ++rep) {
    const int modes = 2 + rep;
    const aw::ChaosVector x = aw::sample_chaos(engine, modes, 10, 4 + rep % 3, 8);
    const aw::kernels::PackedChaos pv = aw::kernels::pack(x);
    const int count = 300 + 7 * rep;  // exercises chunk boundaries and tails
    const std::vector<double> xi = random_batch(500 + static_cast<std::uint64_t>(rep), modes, count);
    std::vector<double> values(static_cast<std::size_t>(count));
    ops.eval_batch(pv, xi.data(), count, values.data());
    for (int s = 0; s < count; s += 17) {
      std::vector<double> point(static_cast<std::size_t>(modes));
      for (int i = 0; i < modes; ++i) point[static_cast<std::size_t>(i)] = xi[static_cast<std::size_t>(i) * count + s];
      const double expected = x.eval(point);
      CHECK(values[static_cast<std::size_t>(s)] ==
            doctest::Approx(expected).epsilon(1e-12).scale(std::max(1.0, std::abs(expected))));
    }
  }
}

TEST_CASE("scalar dot and reductions") {
  const auto& ops = aw::kernels::scalar_ops();
  const int modes = 3;
  const int count = 101;
  const std::vector<double> xi = random_batch(7, modes, count);
  const std::vector<double> w{0.5, -1.25, 2.0};
  std::vector<double> out(static_cast<std::size_t>(count));
  ops.dot_batch(w.data(), modes, xi.data(), count, out.data());
  for (int s = 0; s < count; ++s) {
    double expected = 0.0;
    for (int i = 0; i < modes; ++i) expected += w[static_cast<std::size_t>(i)] * xi[static_cast<std::size_t>(i) * count + s];
    CHECK(out[static_cast<std::size_t>(s)] == doctest::Approx(expected).epsilon(1e-14));
  }

  double plain = 0.0;
  double abs_sum = 0.0;
  double sq = 0.0;
  for (double v : out) {
    plain += v;
    abs_sum += std::abs(v);
    sq += v * v;
  }
  CHECK(ops.sum(out.data(), count) == doctest::Approx(plain).epsilon(1e-13));
  CHECK(ops.sum_abs(out.data(), count) == doctest::Approx(abs_sum).epsilon(1e-13));
  CHECK(ops.sum_sq(out.data(), count) == doctest::Approx(sq).epsilon(1e-13));
}

TEST_CASE("avx2 variant agrees with the scalar reference") {
  const aw::kernels::Ops* simd = aw::kernels::avx2_ops();
  if (simd == nullptr) {
    MESSAGE("AVX2 not available; skipping the equivalence check");
    return;
  }
  const auto& ref = aw::kernels::scalar_ops();
  auto engine = aw::rng::block_engine(107, 0);
  for (int rep = 0; rep < 6; ++rep) {
    const int modes = 2 + rep % 4;
    const aw::ChaosVector x = aw::sample_chaos(engine, modes, 12, 3 + rep % 5, 9);
    const aw::kernels::PackedChaos pv = aw::kernels::pack(x);
    const int count = 257 + 13 * rep;  // off the lane and chunk boundaries
    const std::vector<double> xi = random_batch(900 + static_cast<std::uint64_t>(rep), modes, count);

    std::vector<double> scalar_values(static_cast<std::size_t>(count));
    std::vector<double> simd_values(static_cast<std::size_t>(count));
    ref.eval_batch(pv, xi.data(), count, scalar_values.data());
    simd->eval_batch(pv, xi.data(), count, simd_values.data());
    // lane-identical arithmetic: bit-for-bit equality
    CHECK(std::memcmp(scalar_values.data(), simd_values.data(),
                      scalar_values.size() * sizeof(double)) == 0);

    std::vector<double> w(static_cast<std::size_t>(modes));
    for (double& v : w) v = 2.0 * aw::rng::uniform01(engine) - 1.0;
    std::vector<double> scalar_dot(static_cast<std::size_t>(count));
    std::vector<double> simd_dot(static_cast<std::size_t>(count));
    ref.dot_batch(w.data(), modes, xi.data(), count, scalar_dot.data());
    simd->dot_batch(w.data(), modes, xi.data(), count, simd_dot.data());
    CHECK(std::memcmp(scalar_dot.data(), simd_dot.data(), scalar_dot.size() * sizeof(double)) ==
          0);

    // reductions may re-associate; compare within rounding slack
    const double n_scale = static_cast<double>(count);
    CHECK(simd->sum(scalar_values.data(), count) ==
          doctest::Approx(ref.sum(scalar_values.data(), count))
              .epsilon(1e-13)
              .scale(n_scale));
    CHECK(simd->sum_abs(scalar_values.data(), count) ==
          doctest::Approx(ref.sum_abs(scalar_values.data(), count))
              .epsilon(1e-13)
              .scale(n_scale));
    CHECK(simd->sum_sq(scalar_values.data(), count) ==
          doctest::Approx(ref.sum_sq(scalar_values.data(), count))
              .epsilon(1e-13)
              .scale(n_scale));
  }
}

TEST_CASE("runtime dispatch picks a known variant") {
  const auto& ops = aw::kernels::active_ops();
  const bool known = std::strcmp(ops.name, "scalar") == 0 || std::strcmp(ops.name, "avx2") == 0;
  CHECK(known);
  if (aw::kernels::avx2_ops() != nullptr) {
    CHECK(std::strcmp(ops.name, "avx2") == 0);  // no override set in the test runner
  }
}

TEST_CASE("normal stream is block-deterministic") {
  std::vector<double> a(3 * 64);
  std::vector<double> b(3 * 64);
  aw::rng::fill_normal_block(42, 5, 3, 64, a.data());
  aw::rng::fill_normal_block(42, 5, 3, 64, b.data());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
  aw::rng::fill_normal_block(43, 5, 3, 64, b.data());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) != 0);

  // moments sanity on a larger pull
  const auto stats = aw::rng::run_mc(11, 400000, 1, [](const double* xi, int count, double* out) {
    for (int s = 0; s < count; ++s) out[s] = xi[s];
  });
  CHECK(std::abs(stats.mean()) <= 3.0 * stats.std_error());
  const double second_moment = stats.sum_sq / static_cast<double>(stats.n);
  CHECK(second_moment == doctest::Approx(1.0).epsilon(0.02));
}
