#include "invwalk/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace invwalk::perm {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("permutation word must be nonempty");
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation word is not a bijection on 1.." +
                                  std::to_string(word_.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int size) {
  if (size < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> w(static_cast<std::size_t>(size));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                            std::to_string(size()));
  }
  return word_[static_cast<std::size_t>(position - 1)];
}

Permutation apply_generator(const Permutation& p, int i) {
  if (i < 1 || i >= p.size()) {
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(p.size() - 1));
  }
  std::vector<int> w = p.word();
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return Permutation(std::move(w));
}

long long inversions_naive(const Permutation& p) {
  const auto& w = p.word();
  long long count = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      if (w[a] > w[b]) ++count;
    }
  }
  return count;
}

namespace {

long long merge_count(std::vector<int>& values, std::vector<int>& scratch, std::size_t lo,
                      std::size_t hi) {
  if (hi - lo <= 1) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  long long count = merge_count(values, scratch, lo, mid) + merge_count(values, scratch, mid, hi);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    if (values[a] <= values[b]) {
      scratch[out++] = values[a++];
    } else {
      count += static_cast<long long>(mid - a);
      scratch[out++] = values[b++];
    }
  }
  while (a < mid) scratch[out++] = values[a++];
  while (b < hi) scratch[out++] = values[b++];
  std::copy(scratch.begin() + static_cast<long>(lo), scratch.begin() + static_cast<long>(hi),
            values.begin() + static_cast<long>(lo));
  return count;
}

}  // namespace

long long inversions(const Permutation& p) {
  std::vector<int> values = p.word();
  std::vector<int> scratch(values.size());
  return merge_count(values, scratch, 0, values.size());
}

}  // namespace invwalk::perm
