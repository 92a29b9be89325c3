#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "carhmm/kernels.hpp"
#include "kernels_detail.hpp"

// Scalar reference kernels.  std::fma is used wherever the AVX2 variant uses
// a fused multiply-add so both variants round identically.
namespace carhmm::kernels {

namespace d = detail;

namespace {

inline double exp_lane(double x) {
  if (std::isnan(x)) return x;
  const double nf = std::floor(std::fma(x, d::kInvLn2, 0.5));
  double r = std::fma(-nf, d::kLn2Hi, x);
  r = std::fma(-nf, d::kLn2Lo, r);
  double p = d::kExpC[13];
  for (int k = 12; k >= 0; --k) p = std::fma(p, r, d::kExpC[k]);
  // 2^n applied in two halves so n = 1024 (values near DBL_MAX) stays finite
  double nc = nf;
  nc = nc < -1022.0 ? -1022.0 : nc;
  nc = nc > 1024.0 ? 1024.0 : nc;
  const double nh = std::floor(nc * 0.5);
  const double n2 = nc - nh;
  const auto s1 =
      std::bit_cast<double>(d::kOneBits + (std::uint64_t(std::int64_t(nh)) << 52));
  const auto s2 =
      std::bit_cast<double>(d::kOneBits + (std::uint64_t(std::int64_t(n2)) << 52));
  double out = (p * s1) * s2;
  out = x < d::kExpUnderflow ? 0.0 : out;
  out = x > d::kExpOverflow ? std::numeric_limits<double>::infinity() : out;
  return out;
}

inline double log_lane(double x) {
  // subnormals are rescaled so the exponent extraction below is exact
  const bool tiny = x < std::numeric_limits<double>::min();
  const double xs = tiny ? x * d::kTwo54 : x;
  const auto bits = std::bit_cast<std::uint64_t>(xs);
  double e = double(std::int64_t(bits >> 52)) - 1023.0 - (tiny ? 54.0 : 0.0);
  double m = std::bit_cast<double>((bits & d::kMantissaMask) | d::kOneBits);
  const bool hi = m >= d::kSqrt2;
  m = hi ? m * 0.5 : m;
  e = hi ? e + 1.0 : e;
  const double r = (m - 1.0) / (m + 1.0);
  const double r2 = r * r;
  double w = d::kLogC[9];
  for (int k = 8; k >= 0; --k) w = std::fma(w, r2, d::kLogC[k]);
  const double r_dbl = r + r;
  const double logm = std::fma(r_dbl * r2, w, r_dbl);
  double out = std::fma(e, d::kLn2Lo, logm);
  out = std::fma(e, d::kLn2Hi, out);
  return x <= 0.0 ? -std::numeric_limits<double>::infinity() : out;
}

inline double lgamma_lane(double x) {
  double shift_prod = 1.0;
  double xc = x;
  for (int i = 0; i < d::kLgShiftCount; ++i) {
    const bool lift = xc < d::kLgShiftThreshold;
    shift_prod = lift ? shift_prod * xc : shift_prod;
    xc = lift ? xc + 1.0 : xc;
  }
  const double z = 1.0 / xc;
  const double z2 = z * z;
  double s = d::kLgS[5];
  for (int k = 4; k >= 0; --k) s = std::fma(s, z2, d::kLgS[k]);
  const double series = z * s;
  const double lx = log_lane(xc);
  double stir = (xc - 0.5) * lx;
  stir = stir - xc;
  stir = stir + d::kHalfLog2Pi;
  stir = stir + series;
  return stir - log_lane(shift_prod);
}

void exp_batch_scalar(const double* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = exp_lane(in[i]);
}
void log_batch_scalar(const double* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = log_lane(in[i]);
}
void lgamma_batch_scalar(const double* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = lgamma_lane(in[i]);
}

void gemm_scalar(const double* m, std::size_t rows, std::size_t dd,
                 const double* xt, std::size_t n, double* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < dd; ++t) {
        acc = std::fma(m[r * dd + t], xt[t * n + j], acc);
      }
      out[r * n + j] = acc;
    }
  }
}

}  // namespace

const Variant& scalar_variant() {
  static const Variant v{"scalar", &exp_batch_scalar, &log_batch_scalar,
                         &lgamma_batch_scalar, &gemm_scalar};
  return v;
}

double exp_ref(double x) { return exp_lane(x); }
double log_ref(double x) { return log_lane(x); }
double lgamma_pos_ref(double x) { return lgamma_lane(x); }

}  // namespace carhmm::kernels
