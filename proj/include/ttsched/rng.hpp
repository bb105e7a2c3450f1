#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ttsched {

// Seeded PRNG wrapper around std::mt19937_64. The distribution helpers are
// hand-rolled because the std:: distribution objects are not guaranteed to
// produce the same stream on every standard library; results here depend
// only on the engine, so runs reproduce bit-for-bit for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 1) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n), unbiased by rejection.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform integer in [lo, hi] inclusive.
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(uniform_index(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double exponential(double mean) { return -mean * std::log1p(-uniform()); }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer, used to derive independent substream seeds from a
// root seed plus stream indices (replication, topology, grid point, ...).
inline std::uint64_t mix_seed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = mix_seed(root);
  s = mix_seed(s ^ (a + 0x1000000001ull));
  s = mix_seed(s ^ (b + 0x2000000002ull));
  s = mix_seed(s ^ (c + 0x3000000003ull));
  return s;
}

}  // namespace ttsched
