#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "invwalk/expansion.hpp"
#include "invwalk/poly.hpp"
#include "invwalk/rational.hpp"

namespace invwalk::extract {

/// Exact expected inversion count after t steps: the rational heat-flow run
/// at conductivity 1/n on the hot-boundary triangle.
Rational exact_E(int n, long long t);

/// Exact E_nt as a polynomial in the conductivity (symbolic triangle run).
Poly exact_E_poly(int n, long long t);

/// Computes exact E at the t+1 widths n = max(t,1)..max(t,1)+t, solves for
/// the 1/n expansion, then verifies the expansion reproduces E at two
/// further widths. A verification failure means E is not polynomial in 1/n
/// on n >= t and raises math_assertion_error.
InverseNExpansion expand_E_in_inverse_n(int t);

/// The integer sequence hidden in the expansion's 1/n^r brackets.
struct DExtraction {
  int t = 0;
  std::map<int, Rational> d;  // r -> d_r for r = 2..t; always integral
  InverseNExpansion source;
};

/// Reads d_r = ((-1)^r a_r - 2^r catalan(r) C(t, r+1)) / (4 C(t, r)) off
/// expand_E_in_inverse_n(t), checking a_0 = t and a_1 = -2 C(t,2) first.
/// Non-integral d_r raises math_assertion_error (kept as rationals so a
/// falsified extraction cannot hide behind rounding).
DExtraction extract_d(int t);

/// The n-independent coefficients of the finite-boundary correction.
struct GExtraction {
  int t = 0;
  std::map<int, Rational> g;  // r -> g_r for r = 2..t
  Poly correction;            // exact finite E minus the semi-infinite form
  std::vector<int> n_values;
};

/// For each n in n_values (all >= t, at least 3, distinct): correction(x) =
/// symbolic triangle E minus semi_infinite_E(n, t). The corrections must
/// coincide across n — anything else raises math_assertion_error — and
/// g_r = (-1)^r [x^r]correction / (2 C(t, r)).
GExtraction extract_g(int t, const std::vector<int>& n_values);

/// Evaluates the full closed form for E_nt with the extracted d_r:
///   t - (2/n) C(t,2)
///     + sum over r = 2..t of ((-1)^r / n^r) [2^r catalan(r) C(t,r+1)
///                                            + 4 d_r C(t,r)].
/// Requires n >= t and d coverage of r = 2..t.
Rational theorem_reconstruct(int n, int t, const DExtraction& d);

/// One row of the emitted sequences table.
struct SequenceRow {
  char kind = 'd';  // 'd' or 'g'
  int r = 0;
  Rational value;
  int source_t = 0;
  std::vector<int> source_n;
};

std::vector<SequenceRow> sequence_rows(const DExtraction& d);
std::vector<SequenceRow> sequence_rows(const GExtraction& g);

/// Writes "kind,r,value,source_t,source_n_set" rows; values are exact
/// rational strings and the n-set is |-joined.
void write_sequences_csv(std::ostream& os, const std::vector<SequenceRow>& rows);

}  // namespace invwalk::extract
