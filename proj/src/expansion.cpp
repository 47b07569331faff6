#include "invwalk/expansion.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace invwalk {

Rational InverseNExpansion::eval_at(long long n) const {
  if (n <= 0) throw std::invalid_argument("expansion evaluation requires n >= 1");
  Rational u(BigInt(1), BigInt(n));
  Rational acc(0);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * u + *it;
  }
  return acc;
}

InverseNExpansion solve_inverse_n_expansion(
    int t, const std::vector<std::pair<long long, Rational>>& samples) {
  if (t < 0) throw std::invalid_argument("step count t must be >= 0");
  const std::size_t k = static_cast<std::size_t>(t) + 1;
  if (samples.size() != k) {
    throw std::invalid_argument("expected exactly " + std::to_string(k) + " samples, got " +
                                std::to_string(samples.size()));
  }
  std::set<long long> seen;
  for (const auto& [n, value] : samples) {
    if (n < t || n < 1) {
      throw std::invalid_argument("sample n=" + std::to_string(n) +
                                  " is outside Theorem validity range (requires n >= t)");
    }
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate sample n=" + std::to_string(n));
    }
  }

  // Augmented Vandermonde system in u = 1/n, solved exactly.
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k + 1, Rational(0)));
  for (std::size_t row = 0; row < k; ++row) {
    Rational u(BigInt(1), BigInt(samples[row].first));
    Rational p(1);
    for (std::size_t col = 0; col < k; ++col) {
      m[row][col] = p;
      p *= u;
    }
    m[row][k] = samples[row].second;
  }

  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col].is_zero()) ++pivot;
    if (pivot == k) throw std::invalid_argument("singular Vandermonde system");
    std::swap(m[col], m[pivot]);
    Rational inv_pivot = Rational(1) / m[col][col];
    for (std::size_t j = col; j <= k; ++j) m[col][j] *= inv_pivot;
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      Rational factor = m[row][col];
      for (std::size_t j = col; j <= k; ++j) m[row][j] -= factor * m[col][j];
    }
  }

  InverseNExpansion out;
  out.t = t;
  out.coefficients.reserve(k);
  for (std::size_t r = 0; r < k; ++r) out.coefficients.push_back(m[r][k]);
  return out;
}

}  // namespace invwalk
