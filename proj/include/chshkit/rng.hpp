#pragma once

#include <cmath>
#include <cstdint>

namespace chsh {

// Deterministic 64-bit generator (splitmix64). The exact recurrence is part
// of the file-format/reproducibility contract, see README: identical seeds
// must produce identical sample streams across builds and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [-1, 1].
  double next_symmetric() { return 2.0 * next_double() - 1.0; }

  // Standard normal via Box-Muller; consumes exactly two raw draws.
  double next_gaussian() {
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::uint64_t state_;
};

// One splitmix64 step from state `x`, used to derive substream seeds.
inline std::uint64_t splitmix64_once(std::uint64_t x) {
  return SplitMix64(x).next();
}

// Seed for the k-th independent substream of a master seed. Evaluating
// substreams by index keeps parallel sampling loops order-independent.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t k) {
  return seed ^ splitmix64_once(k);
}

}  // namespace chsh
