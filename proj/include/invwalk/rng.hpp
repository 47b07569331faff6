#pragma once

#include <cstdint>

namespace invwalk::perm {

/// SplitMix64 finalizer (Steele/Lea/Vigna). Frozen: changing any constant
/// changes every seeded result in the repo.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-based SplitMix64 stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

/// Initial state of the RNG stream for shard k under a base seed:
/// mix64(seed + (k + 1) * 0x9E3779B97F4A7C15). Documented in the README;
/// shard results are reproducible independently of thread scheduling.
inline std::uint64_t shard_stream_seed(std::uint64_t seed, std::uint64_t shard) {
  return mix64(seed + (shard + 1) * 0x9E3779B97F4A7C15ull);
}

/// Uniform draw from {1..n} by rejection; no modulo bias.
inline int uniform_generator_index(SplitMix64& rng, int n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;  // multiple of bound
  std::uint64_t draw;
  do {
    draw = rng.next();
  } while (draw >= limit);
  return static_cast<int>(draw % bound) + 1;
}

}  // namespace invwalk::perm
