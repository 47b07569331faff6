#include "invwalk/poly.hpp"

#include <ostream>
#include <stdexcept>

namespace invwalk {

namespace {
const Rational kZero = Rational(0);
}

Poly Poly::constant(Rational c) {
  Poly p;
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

Poly Poly::x() { return monomial(1, Rational(1)); }

Poly Poly::monomial(int degree, Rational coefficient) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  Poly p;
  if (!coefficient.is_zero()) {
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.coeffs_.back() = std::move(coefficient);
  }
  return p;
}

Poly Poly::from_coefficients(std::vector<Rational> coefficients) {
  Poly p;
  p.coeffs_ = std::move(coefficients);
  p.trim();
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::coefficient(int r) const {
  if (r < 0 || r >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(r)];
}

Rational Poly::eval(const Rational& x0) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x0 + *it;
  }
  return acc;
}

Poly Poly::scale(const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly p = *this;
  for (auto& coeff : p.coeffs_) coeff *= c;
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& coeff : p.coeffs_) coeff = -coeff;
  return p;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Poly::from_coefficients(std::move(out));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int r = 0; r <= degree(); ++r) {
    const Rational& c = coefficient(r);
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    Rational mag = negative ? -c : c;
    if (r == 0) {
      out += mag.compact_str();
    } else {
      if (!(mag == Rational(1))) out += mag.compact_str();
      out += "x";
      if (r >= 2) out += "^" + std::to_string(r);
    }
  }
  return out;
}

std::string Poly::machine_str() const {
  if (is_zero()) return "0/1";
  std::string out;
  for (int r = 0; r <= degree(); ++r) {
    if (r > 0) out += " + ";
    out += coefficient(r).str();
    if (r == 1) out += "*x";
    if (r >= 2) out += "*x^" + std::to_string(r);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.str();
}

}  // namespace invwalk
