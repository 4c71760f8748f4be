#include "annlab/kernels.hpp"

namespace annlab::kernels {

static void acc_scalar(std::int32_t* acc, const std::int32_t* col, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) acc[j] += col[j];
}

static void thr_scalar(const std::int32_t* acc, std::uint8_t* out, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) out[j] = acc[j] >= 0 ? 1 : 0;
}

const Kernel& scalar() {
  static const Kernel k{Isa::Scalar, "scalar", acc_scalar, thr_scalar};
  return k;
}

}  // namespace annlab::kernels
