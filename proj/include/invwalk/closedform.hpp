#pragma once

#include <vector>

#include "invwalk/poly.hpp"
#include "invwalk/rational.hpp"

namespace invwalk::closedform {

/// C(a, b), with the convention that out-of-range b (b < 0 or b > a) gives 0.
/// Several identities below rely on that convention silently.
BigInt binomial(long long a, long long b);

/// Catalan number C(2r, r) / (r + 1).
BigInt catalan(int r);

/// Number of Catalan walks in 2r half-steps from sublevel k down to 0 that
/// touch 0 only at the final half-step: C(2r-1, r-k) - C(2r-1, r-k-1).
/// Equals catalan(r) for k = 1 and vanishes for k > r.
BigInt ballot_walks(int r, int k);

/// Memoized ballot_walks table for r = 1..max_r, k = 1..r. Read-only after
/// construction, so it can be shared across threads freely.
class BallotTable {
 public:
  explicit BallotTable(int max_r);

  int max_r() const { return max_r_; }
  const BigInt& operator()(int r, int k) const;

 private:
  int max_r_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

/// Independent oracle for ballot_walks: direct enumeration of all 2^(2r)
/// half-step sign sequences. Throws budget_error for r > 12.
BigInt brute_force_catalan_walks(int r, int k);

/// Semi-infinite cell value at sublevel k after t steps, as a polynomial in
/// the conductivity:
///   (1/2) * sum over r = k..t of (-1)^(r+k) C(t,r) 2^r ballot_walks(r,k) x^r.
Poly semi_infinite_p(int k, int t);

/// Semi-infinite total heat below the diagonal for width n after t steps:
///   n t x - ((n+1)/2) * sum over r = 2..t of (-1)^r C(t,r) 2^r catalan(r-1) x^r.
/// Lower-bounds the finite-triangle total heat for n >= t.
Poly semi_infinite_E(int n, int t);

/// Lower bound on E_nt in powers of 1/n:
///   t - (2/n) C(t,2)
///     + sum over r = 2..t of ((-1)^r / n^r) [2^r catalan(r) C(t,r+1)
///                                            - 2^(r-1) catalan(r-1) C(t,r)].
/// Identical to semi_infinite_E evaluated at x = 1/n.
Rational theorem_lower_bound(int n, int t);

/// Upper bound on E_nt in powers of 1/n:
///   t - (2/n) C(t,2) + sum over r = 2..t of ((-1)^r / n^r) 2^r catalan(r) C(t,r+1).
/// Identical to iterated_upper_bound evaluated at x = 1/n.
Rational theorem_upper_bound(int n, int t);

/// Upper bound as a polynomial in x, from the total-heat recursion with the
/// semi-infinite first-subdiagonal sums substituted for the finite ones:
///   n t x - 2x * sum over tau = 1..t-1 of n * semi_infinite_p(1, tau).
Poly iterated_upper_bound(int n, int t);

}  // namespace invwalk::closedform
