#include "cgk/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace cgk::kernels {

namespace {

// x in [0, 2^31): quotient via a double reciprocal, then one-step correction.
__attribute__((target("avx2"))) inline __m256i reduce8(__m256i x, __m256i vm,
                                                        __m256d inv) {
  __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(x));
  __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(x, 1));
  __m128i qlo = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_mul_pd(lo, inv)));
  __m128i qhi = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_mul_pd(hi, inv)));
  __m256i q = _mm256_set_m128i(qhi, qlo);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vm));
  __m256i zero = _mm256_setzero_si256();
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vm));
  __m256i too_big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vm, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(r, _mm256_and_si256(too_big, vm));
}

__attribute__((target("avx2"))) void axpy_mod_avx2(std::int32_t* dst,
                                                   const std::int32_t* src,
                                                   std::size_t n, std::int32_t coef,
                                                   std::int32_t m) {
  const __m256i vc = _mm256_set1_epi32(coef);
  const __m256i vm = _mm256_set1_epi32(m);
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(m));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce8(x, vm, inv));
  }
  for (; i < n; ++i) dst[i] = (dst[i] + coef * src[i]) % m;
}

__attribute__((target("avx2"))) std::size_t count_nonzero_avx2(const std::int32_t* v,
                                                               std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t zeros = 0, i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, zero)));
    zeros += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  std::size_t c = (i - zeros);
  for (; i < n; ++i) c += v[i] != 0;
  return c;
}

}  // namespace

const Ops* avx2_ops() {
  static const Ops ops{axpy_mod_avx2, count_nonzero_avx2};
  return &ops;
}

}  // namespace cgk::kernels

#else

namespace cgk::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace cgk::kernels

#endif
