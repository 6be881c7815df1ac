#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace embcam {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from (seed, stream id). Per-item streams
// make parallel and serial runs produce identical results.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

// mt19937_64 output is pinned by the standard. The helpers below stay away
// from <random> distributions, whose sequences are implementation-defined.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng(mix_seed(seed, stream));
}

inline double uniform01(Rng& rng) { return double(rng() >> 11) * 0x1.0p-53; }

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Box-Muller, one value per call.
inline double normal01(Rng& rng) {
  double u1 = double((rng() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  double u2 = double(rng() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925287 * u2);
}

// Modulo bias is ~n/2^64, irrelevant at the index ranges used here.
inline std::size_t bounded(Rng& rng, std::size_t n) {
  return std::size_t(rng() % n);
}

}  // namespace embcam
