#pragma once

#include <cstddef>
#include <span>
#include <string>

// Batch arithmetic kernels behind the likelihood hot path.  Every kernel has
// a scalar reference implementation and, on x86-64, an AVX2+FMA variant that
// executes the identical operation sequence lane-wise.  The active variant is
// selected once at startup from CPUID, overridable with the environment
// variable CARHMM_KERNELS=scalar|avx2.  Equivalence of the two variants is
// asserted by tests/test_kernels.cpp.
namespace carhmm::kernels {

using UnaryFn = void (*)(const double* in, double* out, std::size_t n);

// out[r*n + j] = sum_t m[r*d + t] * xt[t*n + j]
// m is rows x d row-major, xt is d x n row-major.
using GemmFn = void (*)(const double* m, std::size_t rows, std::size_t d,
                        const double* xt, std::size_t n, double* out);

struct Variant {
  const char* name;
  UnaryFn exp;      // results below exp(-708) flush to 0; above exp(709.8) -> inf
  UnaryFn log;      // x <= 0 -> -inf; positive finite otherwise
  UnaryFn lgamma;   // positive domain only
  GemmFn gemm;
};

const Variant& scalar_variant();
#if defined(__x86_64__) || defined(_M_X64)
const Variant& avx2_variant();
bool avx2_supported();
#endif

// Runtime-selected variant (sticky after first call).
const Variant& active();
std::string active_name();

inline void exp_batch(std::span<const double> in, std::span<double> out) {
  active().exp(in.data(), out.data(), in.size());
}
inline void log_batch(std::span<const double> in, std::span<double> out) {
  active().log(in.data(), out.data(), in.size());
}
inline void lgamma_batch(std::span<const double> in, std::span<double> out) {
  active().lgamma(in.data(), out.data(), in.size());
}
inline void gemm(std::span<const double> m, std::size_t rows, std::size_t d,
                 std::span<const double> xt, std::size_t n, std::span<double> out) {
  active().gemm(m.data(), rows, d, xt.data(), n, out.data());
}

// One-off scalar entry points running the same reference algorithms.
double exp_ref(double x);
double log_ref(double x);
double lgamma_pos_ref(double x);

}  // namespace carhmm::kernels
