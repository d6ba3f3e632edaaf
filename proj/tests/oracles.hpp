#pragma once

// Independent oracles for the engine's statistical and integration behavior.
// Everything here is derived from closed forms, never from the code under
// test.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracles {

constexpr double kLn2 = 0.6931471805599453;

// Closed-form mass split of exponential decay after time t: the source keeps
// exp(-lambda t), the receiving branch holds 1 - exp(-lambda t).
inline double transferred_mass(double lambda, double t) { return 1.0 - std::exp(-lambda * t); }
inline double remaining_mass(double lambda, double t) { return std::exp(-lambda * t); }

// Truncated-exponential CDF on [0, cutoff].
inline double truncated_exp_cdf(double tau, double lambda, double cutoff) {
  return (1.0 - std::exp(-lambda * tau)) / (1.0 - std::exp(-lambda * cutoff));
}

// Inverse-CDF sampler for the truncated exponential, driven by a caller's
// uniforms. Used to cross-check the engine's hit times.
inline double truncated_exp_quantile(double u, double lambda, double cutoff) {
  const double scale = 1.0 - std::exp(-lambda * cutoff);
  return -std::log(1.0 - u * scale) / lambda;
}

// Composite Simpson quadrature, an integration route independent of the
// engine's midpoint rule.
template <typename F>
double simpson(F f, double a, double b, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) {
    sum += f(a + h * i) * (i % 2 == 0 ? 2.0 : 4.0);
  }
  return sum * h / 3.0;
}

// Kolmogorov-Smirnov sup-distance of samples against a CDF, written
// independently of the engine's ks_test.
template <typename Cdf>
double ks_distance(std::vector<double> samples, Cdf cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  return d;
}

// 99% critical value of the one-sample KS statistic.
inline double ks_critical_99(std::size_t n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

// Reference implementation of the documented seed derivation, kept separate
// from the library's copy so drift breaks a test.
inline std::uint64_t reference_splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t reference_split_seed(std::uint64_t base, std::uint64_t index) {
  return reference_splitmix64(reference_splitmix64(base) ^
                              reference_splitmix64(index * 0x9E3779B97F4A7C15ULL + 1));
}

}  // namespace oracles
