#pragma once

#include <cstdint>

// Polynomial coefficients and range-reduction constants shared verbatim by
// the scalar and AVX2 kernel variants.  Both variants must execute the same
// operation sequence on these constants so their results agree lane-for-lane.
namespace carhmm::kernels::detail {

// ---- exp ----
// e^x = 2^n * e^r, n = floor(x/ln2 + 1/2), r = x - n*ln2 (Cody-Waite split).
inline constexpr double kInvLn2 = 1.4426950408889634074;
inline constexpr double kLn2Hi = 6.93147180369123816490e-01;  // 21 trailing zero bits
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kExpOverflow = 709.782712893384;   // ~log(DBL_MAX)
inline constexpr double kExpUnderflow = -708.0;            // results below flush to 0
// Taylor coefficients 1/k!, k = 0..13 (|r| <= ln2/2 keeps the tail < 1 ulp)
inline constexpr double kExpC[14] = {
    1.0,
    1.0,
    0.5,
    1.0 / 6.0,
    1.0 / 24.0,
    1.0 / 120.0,
    1.0 / 720.0,
    1.0 / 5040.0,
    1.0 / 40320.0,
    1.0 / 362880.0,
    1.0 / 3628800.0,
    1.0 / 39916800.0,
    1.0 / 479001600.0,
    1.0 / 6227020800.0,
};

// ---- log ----
// log x = e*ln2 + 2*atanh(r), r = (m-1)/(m+1) with m in [sqrt(1/2), sqrt(2)).
inline constexpr double kSqrt2 = 1.4142135623730951;
// odd reciprocals 1/3 .. 1/21 for the atanh series in r^2
inline constexpr double kLogC[10] = {
    1.0 / 3.0,  1.0 / 5.0,  1.0 / 7.0,  1.0 / 9.0,  1.0 / 11.0,
    1.0 / 13.0, 1.0 / 15.0, 1.0 / 17.0, 1.0 / 19.0, 1.0 / 21.0,
};

// ---- lgamma (positive domain) ----
// Arguments below 8 are shifted up by the recurrence
//   lgamma(x) = lgamma(x+k) - log(x(x+1)...(x+k-1)),
// then Stirling's series applies:
//   lgamma(z) = (z-1/2)log z - z + log(2pi)/2 + sum_j S_j / z^(2j+1).
inline constexpr double kLgShiftThreshold = 8.0;
inline constexpr int kLgShiftCount = 8;
inline constexpr double kHalfLog2Pi = 0.91893853320467274178;
inline constexpr double kLgS[6] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
};

inline constexpr std::uint64_t kOneBits = 0x3ff0000000000000ULL;
inline constexpr std::uint64_t kMantissaMask = 0x000fffffffffffffULL;
inline constexpr double kTwo52 = 4503599627370496.0;  // 2^52
inline constexpr double kTwo54 = 18014398509481984.0; // 2^54

}  // namespace carhmm::kernels::detail
