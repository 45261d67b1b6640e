#include <cstdlib>
#include <string_view>

#include "bsq/simd/kernels.hpp"

namespace bsq::kernels {

bool avx2_available() {
#if defined(BSQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

namespace {
const KernelTable& select() {
  const char* forced = std::getenv("BSQ_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") return scalar::table();
#ifdef BSQ_HAVE_AVX2
  if (avx2_available()) return avx2::table();
#endif
  return scalar::table();
}
}  // namespace

const KernelTable& active() {
  static const KernelTable& t = select();
  return t;
}

}  // namespace bsq::kernels
