#include <immintrin.h>

#include <cstdint>
#include <limits>

#include "carhmm/kernels.hpp"
#include "kernels_detail.hpp"

// AVX2+FMA variant.  Each vector routine mirrors the scalar reference in
// src/kernels_scalar.cpp operation-for-operation; tails fall back to the
// scalar lanes so results are identical regardless of array length.
namespace carhmm::kernels {

namespace d = detail;

namespace {

inline __m256d select(__m256d mask, __m256d a, __m256d b) {
  return _mm256_blendv_pd(b, a, mask);
}

// exact for inputs holding small integers (|v| < 2^31)
inline __m256i to_epi64(__m256d v) {
  return _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(v));
}

inline __m256d exp4(__m256d x) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d nf =
      _mm256_floor_pd(_mm256_fmadd_pd(x, _mm256_set1_pd(d::kInvLn2), half));
  __m256d r = _mm256_fnmadd_pd(nf, _mm256_set1_pd(d::kLn2Hi), x);
  r = _mm256_fnmadd_pd(nf, _mm256_set1_pd(d::kLn2Lo), r);
  __m256d p = _mm256_set1_pd(d::kExpC[13]);
  for (int k = 12; k >= 0; --k) {
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(d::kExpC[k]));
  }
  __m256d nc = _mm256_max_pd(nf, _mm256_set1_pd(-1022.0));
  nc = _mm256_min_pd(nc, _mm256_set1_pd(1024.0));
  const __m256d nh = _mm256_floor_pd(_mm256_mul_pd(nc, half));
  const __m256d n2 = _mm256_sub_pd(nc, nh);
  const __m256i one_bits = _mm256_set1_epi64x(std::int64_t(d::kOneBits));
  const __m256d s1 = _mm256_castsi256_pd(
      _mm256_add_epi64(one_bits, _mm256_slli_epi64(to_epi64(nh), 52)));
  const __m256d s2 = _mm256_castsi256_pd(
      _mm256_add_epi64(one_bits, _mm256_slli_epi64(to_epi64(n2), 52)));
  __m256d out = _mm256_mul_pd(_mm256_mul_pd(p, s1), s2);
  out = select(_mm256_cmp_pd(x, _mm256_set1_pd(d::kExpUnderflow), _CMP_LT_OQ),
               _mm256_setzero_pd(), out);
  out = select(_mm256_cmp_pd(x, _mm256_set1_pd(d::kExpOverflow), _CMP_GT_OQ),
               _mm256_set1_pd(std::numeric_limits<double>::infinity()), out);
  return out;
}

inline __m256d log4(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d tiny_mask =
      _mm256_cmp_pd(x, _mm256_set1_pd(std::numeric_limits<double>::min()), _CMP_LT_OQ);
  const __m256d xs = select(tiny_mask, _mm256_mul_pd(x, _mm256_set1_pd(d::kTwo54)), x);
  const __m256i bits = _mm256_castpd_si256(xs);
  // biased exponent to double: or small int into 2^52's mantissa, subtract 2^52
  const __m256i exp_i = _mm256_srli_epi64(bits, 52);
  const __m256d two52 = _mm256_set1_pd(d::kTwo52);
  const __m256d exp_d = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(exp_i, _mm256_castpd_si256(two52))), two52);
  __m256d e = _mm256_sub_pd(exp_d, _mm256_set1_pd(1023.0));
  e = select(tiny_mask, _mm256_sub_pd(e, _mm256_set1_pd(54.0)), e);
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(std::int64_t(d::kMantissaMask))),
      _mm256_set1_epi64x(std::int64_t(d::kOneBits))));
  const __m256d hi_mask = _mm256_cmp_pd(m, _mm256_set1_pd(d::kSqrt2), _CMP_GE_OQ);
  m = select(hi_mask, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), m);
  e = select(hi_mask, _mm256_add_pd(e, one), e);
  const __m256d r = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d r2 = _mm256_mul_pd(r, r);
  __m256d w = _mm256_set1_pd(d::kLogC[9]);
  for (int k = 8; k >= 0; --k) {
    w = _mm256_fmadd_pd(w, r2, _mm256_set1_pd(d::kLogC[k]));
  }
  const __m256d r_dbl = _mm256_add_pd(r, r);
  const __m256d logm = _mm256_fmadd_pd(_mm256_mul_pd(r_dbl, r2), w, r_dbl);
  __m256d out = _mm256_fmadd_pd(e, _mm256_set1_pd(d::kLn2Lo), logm);
  out = _mm256_fmadd_pd(e, _mm256_set1_pd(d::kLn2Hi), out);
  return select(_mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_LE_OQ),
                _mm256_set1_pd(-std::numeric_limits<double>::infinity()), out);
}

inline __m256d lgamma4(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d threshold = _mm256_set1_pd(d::kLgShiftThreshold);
  __m256d shift_prod = one;
  __m256d xc = x;
  for (int i = 0; i < d::kLgShiftCount; ++i) {
    const __m256d lift = _mm256_cmp_pd(xc, threshold, _CMP_LT_OQ);
    shift_prod = select(lift, _mm256_mul_pd(shift_prod, xc), shift_prod);
    xc = select(lift, _mm256_add_pd(xc, one), xc);
  }
  const __m256d z = _mm256_div_pd(one, xc);
  const __m256d z2 = _mm256_mul_pd(z, z);
  __m256d s = _mm256_set1_pd(d::kLgS[5]);
  for (int k = 4; k >= 0; --k) {
    s = _mm256_fmadd_pd(s, z2, _mm256_set1_pd(d::kLgS[k]));
  }
  const __m256d series = _mm256_mul_pd(z, s);
  const __m256d lx = log4(xc);
  __m256d stir = _mm256_mul_pd(_mm256_sub_pd(xc, _mm256_set1_pd(0.5)), lx);
  stir = _mm256_sub_pd(stir, xc);
  stir = _mm256_add_pd(stir, _mm256_set1_pd(d::kHalfLog2Pi));
  stir = _mm256_add_pd(stir, series);
  return _mm256_sub_pd(stir, log4(shift_prod));
}

template <__m256d (*Fn4)(__m256d), double (*Fn1)(double)>
void unary_batch(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, Fn4(_mm256_loadu_pd(in + i)));
  }
  for (; i < n; ++i) out[i] = Fn1(in[i]);
}

void gemm_avx2(const double* m, std::size_t rows, std::size_t dd,
               const double* xt, std::size_t n, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t t = 0; t < dd; ++t) {
        acc = _mm256_fmadd_pd(_mm256_broadcast_sd(m + r * dd + t),
                              _mm256_loadu_pd(xt + t * n + j), acc);
      }
      _mm256_storeu_pd(out + r * n + j, acc);
    }
    for (; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < dd; ++t) {
        acc = __builtin_fma(m[r * dd + t], xt[t * n + j], acc);
      }
      out[r * n + j] = acc;
    }
  }
}

void exp_batch_avx2(const double* in, double* out, std::size_t n) {
  unary_batch<&exp4, &exp_ref>(in, out, n);
}
void log_batch_avx2(const double* in, double* out, std::size_t n) {
  unary_batch<&log4, &log_ref>(in, out, n);
}
void lgamma_batch_avx2(const double* in, double* out, std::size_t n) {
  unary_batch<&lgamma4, &lgamma_pos_ref>(in, out, n);
}

}  // namespace

const Variant& avx2_variant() {
  static const Variant v{"avx2", &exp_batch_avx2, &log_batch_avx2,
                         &lgamma_batch_avx2, &gemm_avx2};
  return v;
}

}  // namespace carhmm::kernels
