#include "annlab/kernels.hpp"

#ifdef ANNLAB_HAVE_AVX2
#include <immintrin.h>

namespace annlab::kernels {

static void acc_avx2(std::int32_t* acc, const std::int32_t* col, std::size_t n) {
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + j));
    __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(col + j));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + j), _mm256_add_epi32(a, c));
  }
  for (; j < n; ++j) acc[j] += col[j];
}

static void thr_avx2(const std::int32_t* acc, std::uint8_t* out, std::size_t n) {
  const __m256i minus1 = _mm256_set1_epi32(-1);
  std::size_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + j));
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpgt_epi32(a, minus1)));
    for (int b = 0; b < 8; ++b) out[j + b] = (mask >> b) & 1;
  }
  for (; j < n; ++j) out[j] = acc[j] >= 0 ? 1 : 0;
}

const Kernel* avx2() {
  static const Kernel k{Isa::Avx2, "avx2", acc_avx2, thr_avx2};
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &k : nullptr;
}

}  // namespace annlab::kernels

#else

namespace annlab::kernels {
const Kernel* avx2() { return nullptr; }
}  // namespace annlab::kernels

#endif
