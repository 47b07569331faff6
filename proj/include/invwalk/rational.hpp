#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace invwalk {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator. All arithmetic is exact; there is no implicit
/// conversion to floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);

  /// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
  /// malformed input and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Canonical serialization: always "p/q" with q > 0, e.g. "-3/2", "4/1".
  std::string str() const;
  /// Display form: omits the "/1" on integers ("4", "-3/2").
  std::string compact_str() const;

  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on /0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;  // > 0, coprime to num_
};

/// n^k for k >= 0.
BigInt int_pow(const BigInt& base, unsigned long long exponent);

}  // namespace invwalk
