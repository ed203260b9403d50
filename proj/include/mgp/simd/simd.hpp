#pragma once

#include <cstddef>
#include <string>

namespace mgp::simd {

// Batched elementwise math primitives over double arrays. Two implementations
// exist: a scalar reference built on libm, and an AVX2+FMA variant selected at
// runtime when the CPU supports it. The variants are equivalence-tested; any
// one run uses a single implementation throughout, so results are reproducible
// for a fixed machine and MGP_SIMD setting.
struct Kernels {
  void (*exp_v)(const double* x, double* y, std::size_t n);
  void (*log_v)(const double* x, double* y, std::size_t n);
  void (*expm1_v)(const double* x, double* y, std::size_t n);
  void (*log1p_v)(const double* x, double* y, std::size_t n);
  // ln Gamma for x in (0, ~1e6); bulk-sum accuracy (abs+rel ~1e-13)
  void (*lgamma_v)(const double* x, double* y, std::size_t n);
  // sin(pi x) for x in (0, 1)
  void (*sinpi_v)(const double* x, double* y, std::size_t n);
  const char* name;
};

const Kernels& scalar();

// Best implementation for this process: AVX2 when available and not disabled
// via MGP_SIMD=scalar or force_scalar(true).
const Kernels& active();

bool avx2_available();
void force_scalar(bool on);
std::string active_name();

}  // namespace mgp::simd
