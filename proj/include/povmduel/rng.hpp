#pragma once
// SplitMix64: small counter-friendly generator. Every randomized routine in
// the library takes an explicit seed and derives independent streams from it,
// so runs are reproducible regardless of scheduling.

#include <cstdint>

namespace povmduel {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // standard normal (Box-Muller; one value per call, no cached state)
  double gaussian() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    const double v = uniform();
    return __builtin_sqrt(-2.0 * __builtin_log(u)) * __builtin_cos(6.283185307179586477 * v);
  }

  // independent stream for a (seed, counter) pair
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 mixer(seed ^ (counter * 0xD1342543DE82EF95ULL + 0x9E3779B97F4A7C15ULL));
    return SplitMix64(mixer.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace povmduel
