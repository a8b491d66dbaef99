#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace ulinf {

/// Deterministic, platform-independent random stream (xoshiro256++ with
/// splitmix64 seeding). Every randomized operation in the library takes an
/// explicit Rng so results are reproducible bit-for-bit from a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  /// Independent stream keyed by (seed, k1, k2); used for replication-indexed
  /// substreams so parallel and serial runs draw identical numbers.
  static Rng substream(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2) {
    std::uint64_t sm = seed;
    std::uint64_t mixed = splitmix64(sm);
    sm = mixed ^ (k1 + 0x9e3779b97f4a7c15ULL);
    mixed = splitmix64(sm);
    sm = mixed ^ (k2 + 0x9e3779b97f4a7c15ULL);
    return Rng(splitmix64(sm));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform draw strictly inside (0,1): (k + 1/2) * 2^-53 for k < 2^53.
  double uniform01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Exponential(rate) by inversion; strictly positive and finite.
  double exponential(double rate) { return -std::log(uniform01()) / rate; }

  bool bernoulli(double prob) { return uniform01() < prob; }

  /// Unbiased integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace ulinf
