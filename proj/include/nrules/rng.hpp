#pragma once

#include <cstdint>
#include <random>

namespace nrules {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used both to whiten user
// seeds and to derive independent per-trial streams from (base_seed, index).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based seed derivation: trial i of a batch keyed by base_seed uses
// split_seed(base_seed, i). Documented in the README; batches are therefore
// reproducible and trivially parallelizable.
inline std::uint64_t split_seed(std::uint64_t base_seed, std::uint64_t index) {
  return splitmix64(splitmix64(base_seed) ^ splitmix64(index * 0x9E3779B97F4A7C15ULL + 1));
}

// Per-trial random stream. mt19937_64's output sequence is pinned by the
// standard and the uniform below uses raw bits, so trials are bit-reproducible
// across platforms (std::uniform_real_distribution is not).
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nrules
