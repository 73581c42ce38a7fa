#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "aw/chaos.hpp"
#include "aw/kernels.hpp"

namespace aw::kernels {

#if defined(AW_KERNELS_AVX2)
const Ops* avx2_ops_impl();
#endif

PackedChaos pack(const ChaosVector& x) {
  PackedChaos pv;
  pv.modes = x.modes();
  pv.coeffs.reserve(x.nnz());
  pv.exponents.reserve(x.nnz() * static_cast<std::size_t>(x.modes()));
  for (const Term& t : x.terms()) {
    pv.coeffs.push_back(t.coeff);
    for (int i = 0; i < x.modes(); ++i) {
      const int e = t.index[i];
      pv.max_degree = e > pv.max_degree ? e : pv.max_degree;
      pv.exponents.push_back(static_cast<std::uint8_t>(e));
    }
  }
  return pv;
}

const Ops* avx2_ops() {
#if defined(AW_KERNELS_AVX2)
  if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
  return nullptr;
}

const Ops& active_ops() {
  static const Ops* selected = [] {
    const char* forced = std::getenv("AW_KERNELS");
    if (forced != nullptr) {
      if (std::strcmp(forced, "scalar") == 0) return &scalar_ops();
      if (std::strcmp(forced, "avx2") == 0) {
        const Ops* ops = avx2_ops();
        if (ops == nullptr) {
          throw std::runtime_error("AW_KERNELS=avx2 requested but AVX2 is unavailable");
        }
        return ops;
      }
      throw std::runtime_error("AW_KERNELS: unknown kernel variant");
    }
    const Ops* ops = avx2_ops();
    return ops != nullptr ? ops : &scalar_ops();
  }();
  return *selected;
}

}  // namespace aw::kernels
