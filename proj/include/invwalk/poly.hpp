#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "invwalk/rational.hpp"

namespace invwalk {

/// Dense univariate polynomial in the conductivity x with exact rational
/// coefficients. Trailing zero coefficients are always trimmed, so the zero
/// polynomial has an empty coefficient vector and degree() == -1.
class Poly {
 public:
  Poly() = default;  // zero polynomial

  static Poly constant(Rational c);
  static Poly x();  // the monomial x
  static Poly monomial(int degree, Rational coefficient);
  static Poly from_coefficients(std::vector<Rational> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^r; zero beyond the degree.
  const Rational& coefficient(int r) const;

  Rational eval(const Rational& x0) const;
  Poly scale(const Rational& c) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);

  bool operator==(const Poly& rhs) const = default;

  /// Display form matching written mathematics: "0", "4x", "8x-8x^2",
  /// "1-2x+3x^2", "1/2-3/2x".
  std::string str() const;
  /// Machine form, dense over all powers up to the degree, each coefficient
  /// a full "p/q": "0/1 + 8/1*x + -8/1*x^2".
  std::string machine_str() const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace invwalk
