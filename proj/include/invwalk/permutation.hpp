#pragma once

#include <vector>

namespace invwalk::perm {

/// One-line notation word on {1..m}: word()[k] is the entry at position k+1.
/// Immutable after construction; construction validates the bijection.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int size);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  int at(int position) const;  // 1-based

  bool operator==(const Permutation& rhs) const = default;

 private:
  std::vector<int> word_;
};

/// Swaps the entries at positions i and i+1 (the generator s_i, 1 <= i < size).
/// Throws std::out_of_range for an invalid generator index.
Permutation apply_generator(const Permutation& p, int i);

/// O(m^2) pair count.
long long inversions_naive(const Permutation& p);

/// O(m log m) merge count; must agree with inversions_naive everywhere.
long long inversions(const Permutation& p);

}  // namespace invwalk::perm
