#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "invwalk/poly.hpp"
#include "invwalk/rational.hpp"

namespace testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline invwalk::Rational random_rational(std::mt19937_64& rng, long long num_mag = 50,
                                         long long den_max = 30) {
  std::uniform_int_distribution<long long> num(-num_mag, num_mag);
  std::uniform_int_distribution<long long> den(1, den_max);
  return invwalk::Rational(invwalk::BigInt(num(rng)), invwalk::BigInt(den(rng)));
}

inline invwalk::Poly random_poly(std::mt19937_64& rng, int max_degree = 6) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  std::vector<invwalk::Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(d) + 1);
  for (int r = 0; r <= d; ++r) coeffs.push_back(random_rational(rng, 9, 7));
  return invwalk::Poly::from_coefficients(std::move(coeffs));
}

template <typename E, typename F>
void expect_throw_contains(F&& fn, const std::string& needle) {
  try {
    fn();
    FAIL_CHECK("expected an exception containing \"" << needle << "\", none was thrown");
  } catch (const E& e) {
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                  "message \"" << e.what() << "\" lacks \"" << needle << "\"");
  }
}

}  // namespace testutil
