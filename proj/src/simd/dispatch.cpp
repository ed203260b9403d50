#include <atomic>
#include <cstdlib>
#include <cstring>

#include "mgp/simd/simd.hpp"

namespace mgp::simd {

const Kernels* avx2_kernels_impl();  // nullptr on non-x86 builds

namespace {

std::atomic<bool> g_force_scalar{false};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool env_disables_simd() {
  const char* v = std::getenv("MGP_SIMD");
  return v != nullptr && std::strcmp(v, "scalar") == 0;
}

}  // namespace

bool avx2_available() {
  static const bool ok = cpu_has_avx2() && avx2_kernels_impl() != nullptr;
  return ok;
}

void force_scalar(bool on) { g_force_scalar.store(on); }

const Kernels& active() {
  static const bool env_scalar = env_disables_simd();
  if (g_force_scalar.load() || env_scalar || !avx2_available()) return scalar();
  return *avx2_kernels_impl();
}

std::string active_name() { return active().name; }

}  // namespace mgp::simd
