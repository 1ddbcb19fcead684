// Deterministic substream derivation. Every random quantity in a run is drawn
// from a stream keyed by (master seed, purpose tag, indices), so results do
// not depend on evaluation order or thread schedule.
#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace rasec {

namespace stream_tag {
inline constexpr std::uint64_t fading = 1;      // per (realization, node, antenna)
inline constexpr std::uint64_t deflection = 2;  // per realization, random-deflection scheme
inline constexpr std::uint64_t eve_angles = 3;  // per realization, eavesdropper placement
}  // namespace stream_tag

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t a = 0,
                          std::uint64_t b = 0, std::uint64_t c = 0);

// mt19937_64-backed stream with fully specified draw formulas, so identical
// seeds reproduce identical values on any conforming platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  // uniform on [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // pair of independent standard normals (Box-Muller)
  std::pair<double, double> normal_pair();

  // circularly-symmetric complex normal with unit total variance
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace rasec
