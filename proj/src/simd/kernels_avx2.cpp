// AVX2+FMA variants of the batched math primitives. Compiled only on x86-64
// (see CMakeLists); callers must check avx2_available() before selecting.

#include <cstddef>
#include <cstdint>

#include "mgp/simd/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace mgp::simd {

namespace {

constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kLog2E = 1.44269504088896340736;

// signed int64 -> double for |v| < 2^51 (magic-number trick)
inline __m256d cvt_i64_small(__m256i v) {
  const __m256i magic = _mm256_set1_epi64x(0x4338000000000000LL);
  const __m256d magic_d = _mm256_set1_pd(6755399441055744.0);  // 2^52 + 2^51
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(v, magic)), magic_d);
}

inline __m256d poly_exp(__m256d r) {
  // Taylor for e^r on |r| <= ln2/2, degree 12
  __m256d p = _mm256_set1_pd(1.0 / 479001600.0);
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  return p;
}

inline __m256d exp4(__m256d x) {
  x = _mm256_min_pd(_mm256_set1_pd(708.0), _mm256_max_pd(_mm256_set1_pd(-708.0), x));
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLog2E)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Hi), x);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Lo), r);
  const __m256d p = poly_exp(r);
  const __m128i ki = _mm256_cvtpd_epi32(k);
  const __m256i ki64 = _mm256_cvtepi32_epi64(ki);
  const __m256i expo =
      _mm256_slli_epi64(_mm256_add_epi64(ki64, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(expo));
}

inline __m256d atanh_core(__m256d s2) {
  // 1 + s^2/3 + ... + s^18/19, Horner in s^2
  __m256d p = _mm256_set1_pd(1.0 / 19.0);
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 17.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 15.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 13.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 11.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 9.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 7.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 5.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / 3.0));
  p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0));
  return p;
}

inline __m256d log4(__m256d x) {
  const __m256i ix = _mm256_castpd_si256(x);
  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
  __m256i e64 = _mm256_and_si256(_mm256_srli_epi64(ix, 52), _mm256_set1_epi64x(0x7FF));
  e64 = _mm256_sub_epi64(e64, _mm256_set1_epi64x(1023));
  __m256d m = _mm256_castsi256_pd(
      _mm256_or_si256(_mm256_and_si256(ix, mant_mask), one_bits));  // [1, 2)
  const __m256d sqrt2 = _mm256_set1_pd(1.41421356237309514547);
  const __m256d ge = _mm256_cmp_pd(m, sqrt2, _CMP_GE_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), ge);
  __m256d e = cvt_i64_small(e64);
  e = _mm256_add_pd(e, _mm256_and_pd(ge, _mm256_set1_pd(1.0)));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d s2 = _mm256_mul_pd(s, s);
  const __m256d lm = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(2.0), s), atanh_core(s2));
  __m256d r = _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Lo), lm);
  r = _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Hi), r);
  return r;
}

inline __m256d expm1_4(__m256d x) {
  // |x| < 0.5: Taylor x * (1 + x/2 + ... ), degree 15; else exp(x) - 1
  __m256d p = _mm256_set1_pd(1.0 / 1307674368000.0);  // 1/15!
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 87178291200.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 6227020800.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 479001600.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 39916800.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 3628800.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 362880.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 40320.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 5040.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 720.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 120.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 24.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0 / 6.0));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(0.5));
  p = _mm256_fmadd_pd(p, x, _mm256_set1_pd(1.0));
  const __m256d small = _mm256_mul_pd(x, p);
  const __m256d big = _mm256_sub_pd(exp4(x), _mm256_set1_pd(1.0));
  const __m256d absx = _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
  const __m256d use_small = _mm256_cmp_pd(absx, _mm256_set1_pd(0.5), _CMP_LT_OQ);
  return _mm256_blendv_pd(big, small, use_small);
}

inline __m256d log1p_4(__m256d u) {
  // |u| <= 0.25: 2 atanh(u/(2+u)); else log(1+u)
  const __m256d s = _mm256_div_pd(u, _mm256_add_pd(_mm256_set1_pd(2.0), u));
  const __m256d s2 = _mm256_mul_pd(s, s);
  const __m256d small = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(2.0), s), atanh_core(s2));
  const __m256d big = log4(_mm256_add_pd(_mm256_set1_pd(1.0), u));
  const __m256d absu = _mm256_andnot_pd(_mm256_set1_pd(-0.0), u);
  const __m256d use_small = _mm256_cmp_pd(absu, _mm256_set1_pd(0.25), _CMP_LE_OQ);
  return _mm256_blendv_pd(big, small, use_small);
}

constexpr double kHalfLog2Pi = 0.91893853320467274178;

inline __m256d stirling_tail4(__m256d z) {
  const __m256d w = _mm256_div_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(z, z));
  __m256d s = _mm256_set1_pd(1.0 / 156.0);
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(-691.0 / 360360.0));
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(1.0 / 1188.0));
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(-1.0 / 1680.0));
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(1.0 / 1260.0));
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(-1.0 / 360.0));
  s = _mm256_fmadd_pd(s, w, _mm256_set1_pd(1.0 / 12.0));
  return _mm256_div_pd(s, z);
}

inline __m256d lgamma4(__m256d x) {
  // shift arguments below 8 up by 8: lnG(x) = lnG(x+8) - ln(x(x+1)...(x+7))
  const __m256d need = _mm256_cmp_pd(x, _mm256_set1_pd(8.0), _CMP_LT_OQ);
  __m256d p = x;
  for (int i = 1; i < 8; ++i)
    p = _mm256_mul_pd(p, _mm256_add_pd(x, _mm256_set1_pd(double(i))));
  // avoid log of junk on non-shifted lanes
  p = _mm256_blendv_pd(_mm256_set1_pd(1.0), p, need);
  const __m256d shift = _mm256_blendv_pd(_mm256_setzero_pd(), log4(p), need);
  const __m256d z =
      _mm256_add_pd(x, _mm256_and_pd(need, _mm256_set1_pd(8.0)));
  const __m256d lz = log4(z);
  __m256d r = _mm256_fmadd_pd(_mm256_sub_pd(z, _mm256_set1_pd(0.5)), lz,
                              _mm256_set1_pd(kHalfLog2Pi));
  r = _mm256_sub_pd(r, z);
  r = _mm256_add_pd(r, stirling_tail4(z));
  return _mm256_sub_pd(r, shift);
}

inline __m256d sinpi4(__m256d x) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d z =
      _mm256_blendv_pd(x, _mm256_sub_pd(one, x), _mm256_cmp_pd(x, half, _CMP_GT_OQ));
  const __m256d r = _mm256_mul_pd(z, _mm256_set1_pd(3.14159265358979323846));
  const __m256d r2 = _mm256_mul_pd(r, r);
  __m256d s = _mm256_set1_pd(1.0 / 121645100408832000.0);
  s = _mm256_fnmadd_pd(s, r2, _mm256_set1_pd(1.0 / 355687428096000.0));
  s = _mm256_fnmadd_pd(s, r2, _mm256_set1_pd(1.0 / 1307674368000.0));
  s = _mm256_fnmadd_pd(s, r2, _mm256_set1_pd(1.0 / 6227020800.0));
  s = _mm256_fnmadd_pd(s, r2, _mm256_set1_pd(1.0 / 39916800.0));
  s = _mm256_fnmadd_pd(s, r2, _mm256_set1_pd(1.0 / 362880.0));
  s = _mm256_fnmadd_pd(s, r2, _mm256_set1_pd(1.0 / 5040.0));
  s = _mm256_fnmadd_pd(s, r2, _mm256_set1_pd(1.0 / 120.0));
  s = _mm256_fnmadd_pd(s, r2, _mm256_set1_pd(1.0 / 6.0));
  s = _mm256_fnmadd_pd(s, r2, one);
  return _mm256_mul_pd(r, s);
}

template <__m256d (*Op)(__m256d)>
void map_v(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, Op(_mm256_loadu_pd(x + i)));
  if (i < n) {
    double xin[4] = {1.0, 1.0, 1.0, 1.0};
    double yout[4];
    for (std::size_t j = i; j < n; ++j) xin[j - i] = x[j];
    _mm256_storeu_pd(yout, Op(_mm256_loadu_pd(xin)));
    for (std::size_t j = i; j < n; ++j) y[j] = yout[j - i];
  }
}

void a_exp(const double* x, double* y, std::size_t n) { map_v<exp4>(x, y, n); }
void a_log(const double* x, double* y, std::size_t n) { map_v<log4>(x, y, n); }
void a_expm1(const double* x, double* y, std::size_t n) { map_v<expm1_4>(x, y, n); }
void a_log1p(const double* x, double* y, std::size_t n) { map_v<log1p_4>(x, y, n); }
void a_lgamma(const double* x, double* y, std::size_t n) { map_v<lgamma4>(x, y, n); }
void a_sinpi(const double* x, double* y, std::size_t n) { map_v<sinpi4>(x, y, n); }

}  // namespace

const Kernels* avx2_kernels_impl() {
  static const Kernels k = {a_exp, a_log, a_expm1, a_log1p, a_lgamma, a_sinpi, "avx2"};
  return &k;
}

}  // namespace mgp::simd

#else

namespace mgp::simd {
const Kernels* avx2_kernels_impl() { return nullptr; }
}  // namespace mgp::simd

#endif
