#include "annlab/kernels.hpp"

#ifdef ANNLAB_HAVE_NEON
#include <arm_neon.h>

namespace annlab::kernels {

static void acc_neon(std::int32_t* acc, const std::int32_t* col, std::size_t n) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) vst1q_s32(acc + j, vaddq_s32(vld1q_s32(acc + j), vld1q_s32(col + j)));
  for (; j < n; ++j) acc[j] += col[j];
}

static void thr_neon(const std::int32_t* acc, std::uint8_t* out, std::size_t n) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    uint32x4_t ge = vcgezq_s32(vld1q_s32(acc + j));
    out[j] = vgetq_lane_u32(ge, 0) & 1;
    out[j + 1] = vgetq_lane_u32(ge, 1) & 1;
    out[j + 2] = vgetq_lane_u32(ge, 2) & 1;
    out[j + 3] = vgetq_lane_u32(ge, 3) & 1;
  }
  for (; j < n; ++j) out[j] = acc[j] >= 0 ? 1 : 0;
}

const Kernel* neon() {
  static const Kernel k{Isa::Neon, "neon", acc_neon, thr_neon};
  return &k;
}

}  // namespace annlab::kernels

#else

namespace annlab::kernels {
const Kernel* neon() { return nullptr; }
}  // namespace annlab::kernels

#endif
