#pragma once

#include <utility>
#include <vector>

#include "invwalk/rational.hpp"

namespace invwalk {

/// The degree-t polynomial in 1/n that represents E_nt for every n >= t:
/// n |-> sum over r = 0..t of coefficients[r] / n^r.
struct InverseNExpansion {
  int t = 0;
  std::vector<Rational> coefficients;  // a_0..a_t (exactly t+1 entries)

  Rational eval_at(long long n) const;
};

/// Recovers the t+1 expansion coefficients from exactly t+1 exact samples
/// (n, value) by exact Gaussian elimination on the Vandermonde system in
/// u = 1/n. Requires distinct n and n >= t for every sample; throws
/// std::invalid_argument otherwise.
InverseNExpansion solve_inverse_n_expansion(
    int t, const std::vector<std::pair<long long, Rational>>& samples);

}  // namespace invwalk
