#include "invwalk/extract.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "invwalk/closedform.hpp"
#include "invwalk/errors.hpp"
#include "invwalk/heatflow.hpp"

namespace invwalk::extract {

namespace cf = invwalk::closedform;

Rational exact_E(int n, long long t) {
  auto report = heat::run<Rational>(n, t, Rational(BigInt(1), BigInt(n)),
                                    heat::Variant::triangle_hot_boundary);
  return report.total_heat.back();
}

Poly exact_E_poly(int n, long long t) {
  auto report = heat::run<Poly>(n, t, Poly::x(), heat::Variant::triangle_hot_boundary);
  return report.total_heat.back();
}

InverseNExpansion expand_E_in_inverse_n(int t) {
  if (t < 0) throw std::invalid_argument("expansion requires t >= 0");
  const long long base = std::max(t, 1);
  std::vector<std::pair<long long, Rational>> samples;
  samples.reserve(static_cast<std::size_t>(t) + 1);
  for (long long n = base; n <= base + t; ++n) samples.emplace_back(n, exact_E(static_cast<int>(n), t));
  InverseNExpansion expansion = solve_inverse_n_expansion(t, samples);
  for (long long n = base + t + 1; n <= base + t + 2; ++n) {
    if (expansion.eval_at(n) != exact_E(static_cast<int>(n), t)) {
      throw math_assertion_error("expansion not polynomial in 1/n: verification failed at n = " +
                                 std::to_string(n) + ", t = " + std::to_string(t));
    }
  }
  return expansion;
}

DExtraction extract_d(int t) {
  if (t < 2) throw std::invalid_argument("d extraction requires t >= 2");
  DExtraction out;
  out.t = t;
  out.source = expand_E_in_inverse_n(t);
  const auto& a = out.source.coefficients;
  if (a[0] != Rational(t)) {
    throw math_assertion_error("expansion constant term a_0 = " + a[0].str() +
                               " differs from t = " + std::to_string(t));
  }
  if (a[1] != Rational(BigInt(-2) * cf::binomial(t, 2))) {
    throw math_assertion_error("expansion 1/n term a_1 = " + a[1].str() +
                               " differs from -2 C(t,2) at t = " + std::to_string(t));
  }
  for (int r = 2; r <= t; ++r) {
    Rational signed_a = (r % 2 == 0) ? a[static_cast<std::size_t>(r)]
                                     : -a[static_cast<std::size_t>(r)];
    Rational numerator =
        signed_a - Rational(int_pow(BigInt(2), static_cast<unsigned>(r)) * cf::catalan(r) *
                            cf::binomial(t, r + 1));
    Rational d_r = numerator / Rational(BigInt(4) * cf::binomial(t, r));
    if (!d_r.is_integer()) {
      throw math_assertion_error("extracted d_" + std::to_string(r) + " = " + d_r.str() +
                                 " is not an integer (t = " + std::to_string(t) + ")");
    }
    out.d.emplace(r, std::move(d_r));
  }
  return out;
}

GExtraction extract_g(int t, const std::vector<int>& n_values) {
  if (t < 2) throw std::invalid_argument("g extraction requires t >= 2");
  if (n_values.size() < 3) throw std::invalid_argument("g extraction requires at least 3 widths");
  std::set<int> distinct(n_values.begin(), n_values.end());
  if (distinct.size() != n_values.size()) {
    throw std::invalid_argument("g extraction requires distinct widths");
  }
  for (int n : n_values) {
    if (n < t) {
      throw std::invalid_argument("g extraction width n = " + std::to_string(n) +
                                  " violates n >= t = " + std::to_string(t));
    }
  }

  GExtraction out;
  out.t = t;
  out.n_values = n_values;
  bool first = true;
  for (int n : n_values) {
    Poly correction = exact_E_poly(n, t) - cf::semi_infinite_E(n, t);
    if (first) {
      out.correction = std::move(correction);
      first = false;
    } else if (correction != out.correction) {
      throw math_assertion_error("g_r depends on n: correction at n = " + std::to_string(n) +
                                 " is " + correction.str() + ", expected " + out.correction.str());
    }
  }
  if (!out.correction.coefficient(0).is_zero() || !out.correction.coefficient(1).is_zero()) {
    throw math_assertion_error("finite-boundary correction has a nonzero x^0 or x^1 term: " +
                               out.correction.str());
  }
  for (int r = 2; r <= t; ++r) {
    Rational signed_c = (r % 2 == 0) ? out.correction.coefficient(r)
                                     : -out.correction.coefficient(r);
    out.g.emplace(r, signed_c / Rational(BigInt(2) * cf::binomial(t, r)));
  }
  return out;
}

Rational theorem_reconstruct(int n, int t, const DExtraction& d) {
  if (n < t) {
    throw std::invalid_argument("reconstruction requires n >= t (got n = " + std::to_string(n) +
                                ", t = " + std::to_string(t) + ")");
  }
  if (n < 1 || t < 0) throw std::invalid_argument("reconstruction requires n >= 1 and t >= 0");
  Rational sum = Rational(t) - Rational(BigInt(2) * cf::binomial(t, 2), BigInt(n));
  for (int r = 2; r <= t; ++r) {
    auto it = d.d.find(r);
    if (it == d.d.end()) {
      throw std::invalid_argument("missing d_" + std::to_string(r) + " for reconstruction at t = " +
                                  std::to_string(t));
    }
    Rational bracket = Rational(int_pow(BigInt(2), static_cast<unsigned>(r)) * cf::catalan(r) *
                                cf::binomial(t, r + 1)) +
                       Rational(4) * it->second * Rational(cf::binomial(t, r));
    if (r % 2 != 0) bracket = -bracket;
    sum += bracket / Rational(int_pow(BigInt(n), static_cast<unsigned>(r)));
  }
  return sum;
}

std::vector<SequenceRow> sequence_rows(const DExtraction& d) {
  std::vector<SequenceRow> rows;
  std::vector<int> source_n;
  const int base = std::max(d.t, 1);
  for (int n = base; n <= base + d.t; ++n) source_n.push_back(n);
  for (const auto& [r, value] : d.d) rows.push_back({'d', r, value, d.t, source_n});
  return rows;
}

std::vector<SequenceRow> sequence_rows(const GExtraction& g) {
  std::vector<SequenceRow> rows;
  for (const auto& [r, value] : g.g) rows.push_back({'g', r, value, g.t, g.n_values});
  return rows;
}

void write_sequences_csv(std::ostream& os, const std::vector<SequenceRow>& rows) {
  os << "kind,r,value,source_t,source_n_set\n";
  for (const auto& row : rows) {
    os << row.kind << ',' << row.r << ',' << row.value.str() << ',' << row.source_t << ',';
    for (std::size_t i = 0; i < row.source_n.size(); ++i) {
      if (i > 0) os << '|';
      os << row.source_n[i];
    }
    os << '\n';
  }
}

}  // namespace invwalk::extract
