#include "invwalk/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace invwalk {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) {
    throw std::domain_error("division by zero: rational denominator must be nonzero");
  }
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("invalid rational: empty integer part");
    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
      negative = s[0] == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("invalid rational: sign without digits");
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("invalid rational: expected decimal digits, got \"" +
                                    std::string(s) + "\"");
      }
    }
    BigInt value{std::string(s)};
    return negative ? -value : value;
  };

  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den.is_zero()) {
    throw std::domain_error("division by zero: rational denominator must be nonzero");
  }
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  return num_.str() + "/" + den_.str();
}

std::string Rational::compact_str() const {
  return is_integer() ? num_.str() : str();
}

double Rational::to_double() const {
  // Shift both parts down together when they are too wide for double range;
  // the ratio is preserved to double precision.
  BigInt n = num_;
  BigInt d = den_;
  unsigned bits = static_cast<unsigned>(std::max(mp::msb(abs(n) + 1), mp::msb(d)) + 1);
  if (bits > 900) {
    unsigned shift = bits - 512;
    n >>= shift;
    d >>= shift;
    if (d.is_zero()) d = 1;
  }
  return n.convert_to<double>() / d.convert_to<double>();
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero: rational divisor is zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

BigInt int_pow(const BigInt& base, unsigned long long exponent) {
  BigInt result = 1;
  BigInt b = base;
  unsigned long long e = exponent;
  while (e > 0) {
    if (e & 1ull) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace invwalk
