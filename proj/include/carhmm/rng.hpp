#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace carhmm {

// Stream seeds are derived from a master seed with splitmix64 so that
// parallel units (countries, chains, replications) get decorrelated,
// reproducible streams.  This is the documented splitting rule:
//   seed(master, stream, idx) = splitmix64(splitmix64(master ^ GOLDEN*stream) ^ idx)
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t idx = 0) {
  return splitmix64(splitmix64(master ^ 0x9e3779b97f4a7c15ULL * stream) ^ idx);
}

// mt19937_64 engine with explicit sampling transforms.  The transforms are
// spelled out (rather than std:: distributions) so draw sequences are pinned
// to this code, not to a libstdc++ version.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed ? seed : 0x853c49e6748fea9bULL) {}

  std::uint64_t raw() { return eng_(); }

  // uniform on (0,1), 53-bit resolution, never exactly 0 or 1
  double uniform() {
    return (double(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // standard normal, Marsaglia polar method with cached spare
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  // Gamma(shape, 1), Marsaglia-Tsang; boosted for shape < 1
  double gamma(double shape) {
    if (shape < 1.0) {
      const double g = gamma(shape + 1.0);
      return g * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Poisson; inversion below mean 10, Hormann PTRS transformed rejection above
  long long poisson(double mean) {
    if (!(mean > 0.0)) return 0;
    if (mean < 10.0) {
      const double limit = std::exp(-mean);
      long long k = 0;
      double prod = uniform();
      while (prod > limit) {
        ++k;
        prod *= uniform();
      }
      return k;
    }
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
      const double u = uniform() - 0.5;
      const double v = uniform();
      const double us = 0.5 - std::fabs(u);
      const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
      if (us >= 0.07 && v <= v_r) return (long long)kf;
      if (kf < 0.0 || (us < 0.013 && v > us)) continue;
      if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
          kf * log_mean - mean - std::lgamma(kf + 1.0)) {
        return (long long)kf;
      }
    }
  }

  // negative binomial with size r > 0 and success probability p in (0,1):
  // pmf C(r+y-1, y) p^r (1-p)^y, sampled as the gamma-Poisson mixture
  // lambda ~ Gamma(r) * (1-p)/p, y ~ Poisson(lambda).
  long long negative_binomial(double r, double p) {
    const double lambda = gamma(r) * (1.0 - p) / p;
    return poisson(lambda);
  }

  // draw from {0,1,2} with the given (not necessarily normalized) weights
  int categorical3(const double* w) {
    const double total = w[0] + w[1] + w[2];
    double u = uniform() * total;
    if (u < w[0]) return 0;
    u -= w[0];
    if (u < w[1]) return 1;
    return 2;
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace carhmm
