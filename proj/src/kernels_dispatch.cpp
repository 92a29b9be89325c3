#include <cstdlib>
#include <string>

#include "carhmm/kernels.hpp"

namespace carhmm::kernels {

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const Variant& active() {
  static const Variant* chosen = [] {
    const char* env = std::getenv("CARHMM_KERNELS");
    const std::string want = env ? env : "";
    if (want == "scalar") return &scalar_variant();
#if defined(CARHMM_HAVE_AVX2_TU)
    if (want == "avx2") return &avx2_variant();
    if (want.empty() && avx2_supported()) return &avx2_variant();
#endif
    return &scalar_variant();
  }();
  return *chosen;
}

std::string active_name() { return active().name; }

}  // namespace carhmm::kernels
