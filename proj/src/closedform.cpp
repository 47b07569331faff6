#include "invwalk/closedform.hpp"

#include <stdexcept>
#include <string>

#include "invwalk/errors.hpp"

namespace invwalk::closedform {

BigInt binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: the running product is always divisible
  }
  return result;
}

BigInt catalan(int r) {
  if (r < 0) throw std::invalid_argument("catalan requires r >= 0");
  return binomial(2LL * r, r) / (r + 1);
}

BigInt ballot_walks(int r, int k) {
  if (r < 1 || k < 1) throw std::invalid_argument("ballot_walks requires r >= 1 and k >= 1");
  return binomial(2LL * r - 1, r - k) - binomial(2LL * r - 1, static_cast<long long>(r) - k - 1);
}

BallotTable::BallotTable(int max_r) : max_r_(max_r), zero_(0) {
  if (max_r < 1) throw std::invalid_argument("ballot table requires max_r >= 1");
  rows_.resize(static_cast<std::size_t>(max_r) + 1);
  for (int r = 1; r <= max_r; ++r) {
    auto& row = rows_[static_cast<std::size_t>(r)];
    row.reserve(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k) row.push_back(ballot_walks(r, k));
  }
}

const BigInt& BallotTable::operator()(int r, int k) const {
  if (r < 1 || r > max_r_ || k < 1) {
    throw std::out_of_range("ballot table lookup outside 1 <= r <= " + std::to_string(max_r_));
  }
  if (k > r) return zero_;
  return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k - 1)];
}

namespace {

// Positions in doubled units (half a sublevel = 1), so a walk from sublevel k
// starts at 2k and each half-step moves +/-1.
long long count_walks(int position, int remaining) {
  if (remaining == 0) return position == 0 ? 1 : 0;
  if (position <= 0) return 0;          // touched 0 too early
  if (position > remaining) return 0;   // can no longer come down in time
  return count_walks(position - 1, remaining - 1) + count_walks(position + 1, remaining - 1);
}

}  // namespace

BigInt brute_force_catalan_walks(int r, int k) {
  if (r < 1 || k < 1) {
    throw std::invalid_argument("brute_force_catalan_walks requires r >= 1 and k >= 1");
  }
  if (r > 12) {
    throw budget_error("brute-force walk enumeration is limited to r <= 12 (2^(2r) sequences); "
                       "got r = " + std::to_string(r));
  }
  return count_walks(2 * k, 2 * r);
}

Poly semi_infinite_p(int k, int t) {
  if (k < 1) throw std::invalid_argument("semi_infinite_p requires sublevel k >= 1");
  if (t < 0) throw std::invalid_argument("semi_infinite_p requires t >= 0");
  std::vector<Rational> coeffs(static_cast<std::size_t>(t) + 1, Rational(0));
  for (int r = k; r <= t; ++r) {
    BigInt magnitude = binomial(t, r) * int_pow(BigInt(2), static_cast<unsigned>(r)) *
                       ballot_walks(r, k);
    if ((r + k) % 2 != 0) magnitude = -magnitude;
    coeffs[static_cast<std::size_t>(r)] = Rational(std::move(magnitude), BigInt(2));
  }
  return Poly::from_coefficients(std::move(coeffs));
}

Poly semi_infinite_E(int n, int t) {
  if (n < 1) throw std::invalid_argument("semi_infinite_E requires n >= 1");
  if (t < 0) throw std::invalid_argument("semi_infinite_E requires t >= 0");
  std::vector<Rational> coeffs(static_cast<std::size_t>(t) + 1, Rational(0));
  if (t >= 1) coeffs[1] = Rational(static_cast<long long>(n) * t);
  for (int r = 2; r <= t; ++r) {
    BigInt magnitude = BigInt(n + 1) * binomial(t, r) * int_pow(BigInt(2), static_cast<unsigned>(r)) *
                       catalan(r - 1);
    if (r % 2 == 0) magnitude = -magnitude;
    coeffs[static_cast<std::size_t>(r)] = Rational(std::move(magnitude), BigInt(2));
  }
  return Poly::from_coefficients(std::move(coeffs));
}

namespace {

// Shared skeleton of the two 1/n-power bounds; `bracket` supplies the r-th
// correction numerator.
template <typename Bracket>
Rational theorem_bound(int n, int t, Bracket&& bracket) {
  if (n < 1) throw std::invalid_argument("bound requires n >= 1");
  if (t < 0) throw std::invalid_argument("bound requires t >= 0");
  Rational sum = Rational(t) - Rational(BigInt(2) * binomial(t, 2), BigInt(n));
  for (int r = 2; r <= t; ++r) {
    BigInt numerator = bracket(r);
    if (r % 2 != 0) numerator = -numerator;
    sum += Rational(std::move(numerator), int_pow(BigInt(n), static_cast<unsigned>(r)));
  }
  return sum;
}

}  // namespace

Rational theorem_lower_bound(int n, int t) {
  return theorem_bound(n, t, [t](int r) {
    return int_pow(BigInt(2), static_cast<unsigned>(r)) * catalan(r) * binomial(t, r + 1) -
           int_pow(BigInt(2), static_cast<unsigned>(r - 1)) * catalan(r - 1) * binomial(t, r);
  });
}

Rational theorem_upper_bound(int n, int t) {
  return theorem_bound(n, t, [t](int r) {
    return int_pow(BigInt(2), static_cast<unsigned>(r)) * catalan(r) * binomial(t, r + 1);
  });
}

Poly iterated_upper_bound(int n, int t) {
  if (n < 1) throw std::invalid_argument("iterated_upper_bound requires n >= 1");
  if (t < 1) throw std::invalid_argument("iterated_upper_bound requires t >= 1");
  Poly subdiagonal_tail;  // sum of the semi-infinite first-subdiagonal values
  for (int tau = 1; tau <= t - 1; ++tau) subdiagonal_tail += semi_infinite_p(1, tau);
  Poly result = Poly::monomial(1, Rational(static_cast<long long>(n) * t));
  result -= Poly::monomial(1, Rational(2LL * n)) * subdiagonal_tail;
  return result;
}

}  // namespace invwalk::closedform
