#pragma once

#include <cstdint>

#include "invwalk/permutation.hpp"
#include "invwalk/rational.hpp"
#include "invwalk/rng.hpp"

namespace invwalk::perm {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000ull;

/// Configuration of a sampled random walk study on S_{n+1} driven by the n
/// adjacent transpositions s_1..s_n.
struct WalkSpec {
  int n = 1;
  long long t = 0;
  std::uint64_t seed = 0;
  long long samples = 1;
  int shards = 1;

  void validate() const;  // throws std::invalid_argument
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;

  bool operator==(const McEstimate& rhs) const = default;
};

/// Walks t uniform random generator steps from the identity of S_{n+1}.
Permutation sample_walk(int n, long long t, SplitMix64& rng);

/// Exact sum of inv over all n^t generator words, by depth-first traversal
/// with an undo stack and incremental inversion deltas; nothing is stored.
/// Throws budget_error when n^t exceeds the budget.
BigInt enumerate_total_inversions(int n, long long t,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Monte Carlo estimate of the expected inversion count after t steps.
/// Deterministic for a fixed (seed, shards) pair: shard k draws from a
/// SplitMix64 stream seeded with shard_stream_seed(seed, k), and shard
/// sums are combined in shard order.
McEstimate monte_carlo_E(const WalkSpec& spec);

}  // namespace invwalk::perm
