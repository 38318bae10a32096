#include <cstdlib>
#include <cstring>

#include "cgk/kernels.hpp"

namespace cgk::kernels {

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2_ops() != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
      return neon_ops() != nullptr;
  }
  return false;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

const Ops& ops_for(Isa isa) {
  if (!isa_supported(isa)) return scalar_ops();
  switch (isa) {
    case Isa::Avx2:
      return *avx2_ops();
    case Isa::Neon:
      return *neon_ops();
    default:
      return scalar_ops();
  }
}

namespace {
Isa choose() {
  const char* env = std::getenv("CGK_ISA");
  if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}
}  // namespace

Isa active_isa() {
  static const Isa isa = choose();
  return isa;
}

const Ops& active() {
  static const Ops& ops = ops_for(active_isa());
  return ops;
}

}  // namespace cgk::kernels
