#pragma once

// Vectorised modular kernels over int32 lanes. Every variant must produce
// bit-identical results to the scalar reference; the dispatcher picks the
// widest variant the running CPU supports. Set CGK_ISA=scalar to force the
// reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cgk::kernels {

enum class Isa { Scalar, Avx2, Neon };

// Largest modulus accepted by axpy_mod: keeps (m-1)^2 + (m-1) below 2^31.
inline constexpr std::int32_t kMaxModulus = 46340;

struct Ops {
  // dst[i] = (dst[i] + coef * src[i]) mod m, inputs already reduced to [0, m).
  void (*axpy_mod)(std::int32_t* dst, const std::int32_t* src, std::size_t n,
                   std::int32_t coef, std::int32_t m);
  std::size_t (*count_nonzero)(const std::int32_t* v, std::size_t n);
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when not compiled in
const Ops* neon_ops();  // nullptr when not compiled in

bool isa_supported(Isa isa);
Isa active_isa();
std::string_view isa_name(Isa isa);
const Ops& ops_for(Isa isa);
const Ops& active();

inline void axpy_mod(std::span<std::int32_t> dst, std::span<const std::int32_t> src,
                     std::int32_t coef, std::int32_t m) {
  active().axpy_mod(dst.data(), src.data(), dst.size(), coef, m);
}
inline std::size_t count_nonzero(std::span<const std::int32_t> v) {
  return active().count_nonzero(v.data(), v.size());
}

}  // namespace cgk::kernels
