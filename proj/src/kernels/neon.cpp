#include "cgk/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace cgk::kernels {

namespace {

inline int32x4_t reduce4(int32x4_t x, int32x4_t vm, float64x2_t inv) {
  float64x2_t lo = vcvtq_f64_s64(vmovl_s32(vget_low_s32(x)));
  float64x2_t hi = vcvtq_f64_s64(vmovl_s32(vget_high_s32(x)));
  int64x2_t qlo = vcvtq_s64_f64(vrndmq_f64(vmulq_f64(lo, inv)));
  int64x2_t qhi = vcvtq_s64_f64(vrndmq_f64(vmulq_f64(hi, inv)));
  int32x4_t q = vcombine_s32(vmovn_s64(qlo), vmovn_s64(qhi));
  int32x4_t r = vmlsq_s32(x, q, vm);
  uint32x4_t neg = vcltq_s32(r, vdupq_n_s32(0));
  r = vaddq_s32(r, vandq_s32(vreinterpretq_s32_u32(neg), vm));
  uint32x4_t big = vcgeq_s32(r, vm);
  return vsubq_s32(r, vandq_s32(vreinterpretq_s32_u32(big), vm));
}

void axpy_mod_neon(std::int32_t* dst, const std::int32_t* src, std::size_t n,
                   std::int32_t coef, std::int32_t m) {
  const int32x4_t vm = vdupq_n_s32(m);
  const float64x2_t inv = vdupq_n_f64(1.0 / static_cast<double>(m));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    int32x4_t x = vmlaq_n_s32(vld1q_s32(dst + i), vld1q_s32(src + i), coef);
    vst1q_s32(dst + i, reduce4(x, vm, inv));
  }
  for (; i < n; ++i) dst[i] = (dst[i] + coef * src[i]) % m;
}

std::size_t count_nonzero_neon(const std::int32_t* v, std::size_t n) {
  std::size_t c = 0, i = 0;
  uint32x4_t acc = vdupq_n_u32(0);
  for (; i + 4 <= n; i += 4) {
    uint32x4_t nz = vtstq_s32(vld1q_s32(v + i), vld1q_s32(v + i));
    acc = vsubq_u32(acc, nz);  // nz lanes are all-ones, i.e. -1
  }
  c = vaddvq_u32(acc);
  for (; i < n; ++i) c += v[i] != 0;
  return c;
}

}  // namespace

const Ops* neon_ops() {
  static const Ops ops{axpy_mod_neon, count_nonzero_neon};
  return &ops;
}

}  // namespace cgk::kernels

#else

namespace cgk::kernels {
const Ops* neon_ops() { return nullptr; }
}  // namespace cgk::kernels

#endif
