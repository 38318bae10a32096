#include "cgk/kernels.hpp"

namespace cgk::kernels {

namespace {

void axpy_mod_scalar(std::int32_t* dst, const std::int32_t* src, std::size_t n,
                     std::int32_t coef, std::int32_t m) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + coef * src[i]) % m;
}

std::size_t count_nonzero_scalar(const std::int32_t* v, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += v[i] != 0;
  return c;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{axpy_mod_scalar, count_nonzero_scalar};
  return ops;
}

}  // namespace cgk::kernels
