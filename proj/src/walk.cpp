#include "invwalk/walk.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "invwalk/errors.hpp"

namespace invwalk::perm {

void WalkSpec::validate() const {
  if (n < 1) throw std::invalid_argument("walk requires n >= 1");
  if (t < 0) throw std::invalid_argument("walk requires t >= 0");
  if (samples < 1) throw std::invalid_argument("walk requires samples >= 1");
  if (shards < 1) throw std::invalid_argument("walk requires shards >= 1");
  if (static_cast<long long>(shards) > samples) {
    throw std::invalid_argument("walk requires shards <= samples");
  }
}

Permutation sample_walk(int n, long long t, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("walk requires n >= 1");
  if (t < 0) throw std::invalid_argument("walk requires t >= 0");
  std::vector<int> word(static_cast<std::size_t>(n) + 1);
  std::iota(word.begin(), word.end(), 1);
  for (long long step = 0; step < t; ++step) {
    int i = uniform_generator_index(rng, n);
    std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
  }
  return Permutation(std::move(word));
}

namespace {

void enumerate_dfs(std::vector<int>& word, int n, long long depth, long long inv,
                   unsigned __int128& total) {
  if (depth == 0) {
    total += static_cast<unsigned __int128>(inv);
    return;
  }
  for (int i = 1; i <= n; ++i) {
    const std::size_t a = static_cast<std::size_t>(i - 1);
    long long delta = word[a] < word[a + 1] ? 1 : -1;
    std::swap(word[a], word[a + 1]);
    enumerate_dfs(word, n, depth - 1, inv + delta, total);
    std::swap(word[a], word[a + 1]);
  }
}

}  // namespace

BigInt enumerate_total_inversions(int n, long long t, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
  if (t < 0) throw std::invalid_argument("enumeration requires t >= 0");
  BigInt words = int_pow(BigInt(n), static_cast<unsigned long long>(t));
  if (words > BigInt(budget)) {
    throw budget_error("enumeration of " + words.str() + " words exceeds the budget of " +
                       std::to_string(budget) + " words");
  }
  std::vector<int> word(static_cast<std::size_t>(n) + 1);
  std::iota(word.begin(), word.end(), 1);
  unsigned __int128 total = 0;
  enumerate_dfs(word, n, t, 0, total);
  BigInt result = static_cast<std::uint64_t>(total >> 64);
  result <<= 64;
  result += static_cast<std::uint64_t>(total);
  return result;
}

namespace {

struct ShardSums {
  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;
};

ShardSums run_shard(int n, long long t, std::uint64_t stream_seed, long long shard_samples) {
  SplitMix64 rng(stream_seed);
  std::vector<int> word(static_cast<std::size_t>(n) + 1);
  ShardSums sums;
  for (long long s = 0; s < shard_samples; ++s) {
    std::iota(word.begin(), word.end(), 1);
    long long inv = 0;
    for (long long step = 0; step < t; ++step) {
      int i = uniform_generator_index(rng, n);
      const std::size_t a = static_cast<std::size_t>(i - 1);
      inv += word[a] < word[a + 1] ? 1 : -1;
      std::swap(word[a], word[a + 1]);
    }
    sums.sum += static_cast<std::uint64_t>(inv);
    sums.sum_sq += static_cast<unsigned __int128>(inv) * static_cast<unsigned __int128>(inv);
  }
  return sums;
}

}  // namespace

McEstimate monte_carlo_E(const WalkSpec& spec) {
  spec.validate();
  const int shards = spec.shards;
  const long long base = spec.samples / shards;
  const long long extra = spec.samples % shards;
  auto shard_samples = [&](int k) { return base + (k < extra ? 1 : 0); };

  std::vector<ShardSums> results(static_cast<std::size_t>(shards));
  if (shards == 1) {
    results[0] = run_shard(spec.n, spec.t, shard_stream_seed(spec.seed, 0), spec.samples);
  } else {
    const unsigned workers =
        std::min<unsigned>(static_cast<unsigned>(shards),
                           std::max(1u, std::thread::hardware_concurrency()));
    std::atomic<int> next_shard{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int k = next_shard.fetch_add(1); k < shards; k = next_shard.fetch_add(1)) {
          results[static_cast<std::size_t>(k)] =
              run_shard(spec.n, spec.t, shard_stream_seed(spec.seed, static_cast<std::uint64_t>(k)),
                        shard_samples(k));
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // Combine in shard order; the sums are exact integers, so the estimate is
  // bit-identical regardless of scheduling.
  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;
  for (const auto& r : results) {
    sum += r.sum;
    sum_sq += r.sum_sq;
  }

  const double count = static_cast<double>(spec.samples);
  McEstimate est;
  est.samples = spec.samples;
  est.seed = spec.seed;
  est.mean = static_cast<double>(sum) / count;
  if (spec.samples > 1) {
    double variance =
        (static_cast<double>(sum_sq) - static_cast<double>(sum) * est.mean) / (count - 1.0);
    if (variance < 0.0) variance = 0.0;
    est.std_error = std::sqrt(variance / count);
  }
  return est;
}

}  // namespace invwalk::perm
