#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace spinorlab {

/// Counter-based seed splitter (splitmix64).  Every randomized routine in the
/// workbench derives its stream from a single master seed through this, so any
/// individual trial can be replayed in isolation.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1).  53-bit mantissa, platform independent.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (no libc distribution, so streams are
  /// bit-reproducible across standard libraries).
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }
};

/// Derive an independent stream seed from (master, stream, counter).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t counter = 0) {
  SplitMix64 mix(master ^ (0x632be59bd9b4e019ull * (stream + 1)));
  mix.next();
  mix.state += 0x9e3779b97f4a7c15ull * counter;
  return mix.next();
}

}  // namespace spinorlab
