// Acceptance suite: every release-gating property of the exact pipelines,
// one pass/fail line per criterion. Exits with the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invwalk/closedform.hpp"
#include "invwalk/extract.hpp"
#include "invwalk/heatflow.hpp"
#include "invwalk/walk.hpp"

namespace cf = invwalk::closedform;
namespace heat = invwalk::heat;
namespace perm = invwalk::perm;
namespace extract = invwalk::extract;
using invwalk::BigInt;
using invwalk::Poly;
using invwalk::Rational;

namespace {

struct CriterionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw CriterionFailure(message);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Every exact run feeds the step-recursion ledger: E_{tau+1} = E_tau + n x - 2 x e_tau.
struct Prop3Ledger {
  long long checks = 0;
  long long failures = 0;
};

template <typename S>
void collect_prop3(const heat::HeatRunReport<S>& report, int n, const S& x, Prop3Ledger& ledger) {
  using Traits = heat::ScalarTraits<S>;
  S n_x = Traits::zero();
  for (int i = 0; i < n; ++i) n_x += x;
  const S two_x = x + x;
  for (std::size_t tau = 0; tau + 1 < report.total_heat.size(); ++tau) {
    const S e_tau = tau == 0 ? Traits::zero() : report.subdiagonal_sums[tau - 1];
    ++ledger.checks;
    if (!(report.total_heat[tau + 1] == report.total_heat[tau] + n_x - two_x * e_tau)) {
      ++ledger.failures;
    }
  }
}

Rational inv(long long n) { return Rational(BigInt(1), BigInt(n)); }

Poly ipoly(std::vector<long long> coeffs) {
  std::vector<Rational> c;
  for (long long v : coeffs) c.emplace_back(v);
  return Poly::from_coefficients(std::move(c));
}

Prop3Ledger g_ledger;

// 1. Exhaustive enumeration equals n^t times the exact heat-flow value.
void criterion_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 5; ++n) {
    auto report = heat::run<Rational>(n, 7, inv(n), heat::Variant::triangle_hot_boundary);
    collect_prop3(report, n, inv(n), g_ledger);
    for (long long t = 0; t <= 7; ++t) {
      BigInt total = perm::enumerate_total_inversions(n, t);
      Rational scaled = report.total_heat[static_cast<std::size_t>(t)] *
                        Rational(invwalk::int_pow(BigInt(n), static_cast<unsigned long long>(t)));
      require(scaled.is_integer(), "n^t E is not an integer at n=" + std::to_string(n) +
                                       " t=" + std::to_string(t));
      require(scaled == Rational(total), "enumeration mismatch at n=" + std::to_string(n) +
                                             " t=" + std::to_string(t));
    }
  }
  require(seconds_since(start) < 120.0, "exceeded the 2-minute budget");
}

// 2. The published two-step matrices and total-heat polynomials at n = 4.
void criterion_figure_regression() {
  const auto start = std::chrono::steady_clock::now();
  auto f = heat::OrderField<Poly>::init(4, heat::Variant::grid_hot_diagonal);
  f = f.step(Poly::x());
  for (int j = 1; j <= 4; ++j) {
    require(f.at(j + 1, j) == Poly::x(), "step-1 subdiagonal is not x");
  }
  for (int j = 1; j <= 3; ++j) {
    require(f.at(j + 2, j) == Poly(), "step-1 second subdiagonal is not 0");
  }
  f = f.step(Poly::x());
  require(f.at(2, 1) == ipoly({0, 2, -3}) && f.at(5, 4) == ipoly({0, 2, -3}),
          "step-2 corner subdiagonal is not 2x-3x^2");
  require(f.at(3, 2) == ipoly({0, 2, -4}) && f.at(4, 3) == ipoly({0, 2, -4}),
          "step-2 middle subdiagonal is not 2x-4x^2");
  for (int j = 1; j <= 3; ++j) {
    require(f.at(j + 2, j) == ipoly({0, 0, 2}), "step-2 second subdiagonal is not 2x^2");
  }
  auto report = heat::run<Poly>(4, 2, Poly::x(), heat::Variant::grid_hot_diagonal);
  collect_prop3(report, 4, Poly::x(), g_ledger);
  require(report.total_heat[1] == ipoly({0, 4}), "E after one step is not 4x");
  require(report.total_heat[2] == ipoly({0, 8, -8}), "E after two steps is not 8x-8x^2");
  require(seconds_since(start) < 1.0, "exceeded the 1-second budget");
}

// 3. The d sequence: 0, 1, 9, 69, 510, stable across extraction t.
void criterion_d_sequence() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<long long> expected = {0, 1, 9, 69, 510};  // r = 2..6
  for (int t : {6, 7, 8}) {
    auto d = extract::extract_d(t);
    for (int r = 2; r <= 6; ++r) {
      require(d.d.at(r) == Rational(expected[static_cast<std::size_t>(r - 2)]),
              "d_" + std::to_string(r) + " from t=" + std::to_string(t) + " is " +
                  d.d.at(r).str());
    }
    for (const auto& [r, value] : d.d) {
      require(value.is_integer() && value >= Rational(0),
              "d_" + std::to_string(r) + " is not a non-negative integer");
    }
  }
  require(extract::extract_d(7).d.at(7) == extract::extract_d(8).d.at(7),
          "d_7 differs between t = 7 and t = 8");
  require(seconds_since(start) < 300.0, "exceeded the 5-minute budget");
}

// 4. The reconstructed closed form equals the exact dynamic program.
void criterion_reconstruction() {
  for (int t = 0; t <= 8; ++t) {
    extract::DExtraction d;
    if (t >= 2) d = extract::extract_d(t);
    for (int n = std::max(t, 1); n <= t + 4; ++n) {
      require(extract::theorem_reconstruct(n, t, d) == extract::exact_E(n, t),
              "reconstruction differs from the exact value at n=" + std::to_string(n) +
                  " t=" + std::to_string(t));
    }
  }
}

// 5. lower <= exact <= upper, exact rational comparisons, and the 1/n-power
//    bounds agree with the symbolic bounds at x = 1/n. At conductivities up
//    to 1/4 the sandwich is checked on the full box; at x = 1/n it is the
//    closed-form corollary whose premise is n >= t, and the necessity of
//    that premise is asserted explicitly.
void criterion_bound_sandwich() {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Rational> xs = {inv(10), inv(4), inv(n)};
    for (const Rational& x : xs) {
      auto report = heat::run<Rational>(n, 8, x, heat::Variant::triangle_hot_boundary);
      collect_prop3(report, n, x, g_ledger);
      for (int t = 0; t <= 8; ++t) {
        if (x == inv(n) && n < t) continue;  // outside the corollary's premise
        const Rational& exact = report.total_heat[static_cast<std::size_t>(t)];
        const Rational lower = cf::semi_infinite_E(n, t).eval(x);
        require(lower <= exact, "lower bound fails at n=" + std::to_string(n) +
                                    " t=" + std::to_string(t) + " x=" + x.str());
        if (t >= 1) {
          const Rational upper = cf::iterated_upper_bound(n, t).eval(x);
          require(exact <= upper, "upper bound fails at n=" + std::to_string(n) +
                                      " t=" + std::to_string(t) + " x=" + x.str());
        } else {
          require(exact == Rational(0), "E at t=0 is nonzero");
        }
      }
    }
  }
  // The premise really is needed: both bound sides break below n = t.
  require(cf::theorem_lower_bound(1, 3) == Rational(7) && extract::exact_E(1, 3) == Rational(1),
          "expected the documented lower-bound violation at n=1, t=3");
  require(cf::theorem_upper_bound(2, 4) == Rational(1) &&
              extract::exact_E(2, 4) == Rational(BigInt(5), BigInt(4)),
          "expected the documented upper-bound violation at n=2, t=4");
  for (int n = 1; n <= 10; ++n) {
    require(cf::theorem_lower_bound(n, 0) == Rational(0), "t=0 lower bound is nonzero");
    require(cf::theorem_upper_bound(n, 0) == Rational(0), "t=0 upper bound is nonzero");
    for (int t = 1; t <= 10; ++t) {
      require(cf::theorem_lower_bound(n, t) == cf::semi_infinite_E(n, t).eval(inv(n)),
              "1/n-power lower bound differs from its symbolic form at n=" + std::to_string(n) +
                  " t=" + std::to_string(t));
      require(cf::theorem_upper_bound(n, t) == cf::iterated_upper_bound(n, t).eval(inv(n)),
              "1/n-power upper bound differs from its symbolic form at n=" + std::to_string(n) +
                  " t=" + std::to_string(t));
    }
  }
}

// 6. Model equivalences, cell for cell at every step, symbolic.
void criterion_model_equivalences() {
  for (int n = 1; n <= 6; ++n) {
    auto cross = heat::OrderField<Poly>::init(n, heat::Variant::full_grid_cross_diagonal);
    auto grid = heat::OrderField<Poly>::init(n, heat::Variant::grid_hot_diagonal);
    auto triangle = heat::OrderField<Poly>::init(n, heat::Variant::triangle_hot_boundary);
    auto diamond = heat::unfold_to_diamond<Poly>(n);
    for (int t = 1; t <= 8; ++t) {
      cross = cross.step(Poly::x());
      grid = grid.step(Poly::x());
      triangle = triangle.step(Poly::x());
      diamond = diamond.step(Poly::x());
      bool ok = true;
      cross.for_each_cell([&](int i, int j, const Poly& v) { ok = ok && grid.at(i, j) == v; });
      require(ok, "cross-diagonal and hot-diagonal grids differ at n=" + std::to_string(n) +
                      " t=" + std::to_string(t));
      ok = true;
      triangle.for_each_cell([&](int i, int j, const Poly& v) { ok = ok && grid.at(i, j) == v; });
      require(ok, "triangle differs from the grid lower triangle at n=" + std::to_string(n) +
                      " t=" + std::to_string(t));
      ok = true;
      triangle.for_each_cell(
          [&](int i, int j, const Poly& v) { ok = ok && diamond.at(i, j) == v; });
      require(ok, "diamond restriction differs from the triangle at n=" + std::to_string(n) +
                      " t=" + std::to_string(t));
      ok = true;
      diamond.for_each_cell([&](int i, int j, const Poly& v) {
        auto left = heat::diamond_reflect_left({i, j});
        auto bottom = heat::diamond_reflect_bottom(n, {i, j});
        ok = ok && diamond.at(left.first, left.second) == v &&
             diamond.at(bottom.first, bottom.second) == v;
      });
      require(ok, "diamond mirror symmetry fails at n=" + std::to_string(n) +
                      " t=" + std::to_string(t));
    }
    auto report = heat::run<Poly>(n, 8, Poly::x(), heat::Variant::grid_hot_diagonal);
    collect_prop3(report, n, Poly::x(), g_ledger);
  }
}

// 7. The sublevel closed form equals the one-dimensional recursion, and the
//    ballot formula equals brute-force enumeration.
void criterion_closed_form_vs_dp() {
  for (int t = 0; t <= 12; ++t) {
    auto field = heat::run_semi_infinite<Poly>(t, Poly::x());
    for (int k = 1; k <= t; ++k) {
      require(cf::semi_infinite_p(k, t) == field.sublevel(k),
              "sublevel closed form differs from the recursion at k=" + std::to_string(k) +
                  " t=" + std::to_string(t));
    }
  }
  for (int r = 1; r <= 8; ++r) {
    for (int k = 1; k <= r; ++k) {
      require(cf::ballot_walks(r, k) == cf::brute_force_catalan_walks(r, k),
              "ballot count differs from enumeration at r=" + std::to_string(r) +
                  " k=" + std::to_string(k));
    }
  }
}

// 8. The finite-boundary correction: n-independent g with g_2 = 1, tied to
//    the d sequence by 2 g_r = 4 d_r + 2^(r-1) catalan(r-1).
void criterion_correction_structure() {
  for (int t : {2, 3, 4}) {
    auto g_near = extract::extract_g(t, {t, t + 1, t + 2});
    auto g_far = extract::extract_g(t, {t, t + 3, t + 7});
    require(g_near.correction == g_far.correction,
            "correction differs between width sets at t=" + std::to_string(t));
    require(g_near.g.at(2) == Rational(1), "g_2 is not 1 at t=" + std::to_string(t));
  }
  auto g6 = extract::extract_g(6, {6, 7, 8});
  auto d6 = extract::extract_d(6);
  for (int r = 2; r <= 6; ++r) {
    Rational lhs = Rational(2) * g6.g.at(r);
    Rational rhs =
        Rational(4) * d6.d.at(r) +
        Rational(invwalk::int_pow(BigInt(2), static_cast<unsigned>(r - 1)) * cf::catalan(r - 1));
    require(lhs == rhs, "2 g_r = 4 d_r + 2^(r-1) catalan(r-1) fails at r=" + std::to_string(r));
  }
}

// 9. Monte Carlo lands within five standard errors of the exact 3/2, and the
//    seeded estimate is reproducible.
void criterion_monte_carlo() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<int, long long>> cases = {{4, 2}, {2, 3}};
  for (auto [n, t] : cases) {
    perm::WalkSpec spec{n, t, 20260810, 1000000, 4};
    perm::McEstimate est = perm::monte_carlo_E(spec);
    require(std::abs(est.mean - 1.5) <= 5.0 * est.std_error,
            "estimate " + std::to_string(est.mean) + " misses 3/2 by more than 5 sigma at n=" +
                std::to_string(n) + " t=" + std::to_string(t));
    require(perm::monte_carlo_E(spec) == est, "estimate is not reproducible");
  }
  require(seconds_since(start) < 30.0, "exceeded the 30-second budget");
}

// 10. The step recursion E_{tau+1} = E_tau + n x - 2 x e_tau held at every
//     step of every exact run above.
void criterion_step_recursion_ledger() {
  require(g_ledger.checks > 0, "no step-recursion checks were collected");
  require(g_ledger.failures == 0,
          std::to_string(g_ledger.failures) + " of " + std::to_string(g_ledger.checks) +
              " step-recursion checks failed");
  std::printf("      (step recursion verified at %lld steps across all exact runs)\n",
              g_ledger.checks);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"oracle equivalence: enumeration = n^t E for n <= 5, t <= 7", criterion_oracle_equivalence},
      {"figure regression: two-step matrices and E polynomials at n = 4",
       criterion_figure_regression},
      {"d-sequence recovery: 0, 1, 9, 69, 510 at t = 6, 7, 8", criterion_d_sequence},
      {"closed-form reconstruction = exact DP for t <= 8, n in [t, t+4]",
       criterion_reconstruction},
      {"bound sandwich and 1/n-power bound identities", criterion_bound_sandwich},
      {"model equivalences: cross/grid/triangle/diamond, n <= 6, t <= 8",
       criterion_model_equivalences},
      {"sublevel closed form = 1-D recursion (t <= 12); ballot = enumeration (r <= 8)",
       criterion_closed_form_vs_dp},
      {"correction structure: n-independent g, g_2 = 1, d/g identity",
       criterion_correction_structure},
      {"Monte Carlo within 5 standard errors of 3/2, reproducible", criterion_monte_carlo},
      {"step-recursion ledger holds at every collected step", criterion_step_recursion_ledger},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second();
      std::printf("PASS  criterion %2zu: %s (%.2fs)\n", i + 1, criteria[i].first.c_str(),
                  seconds_since(start));
    } catch (const std::exception& e) {
      std::printf("FAIL  criterion %2zu: %s (%.2fs)\n      %s\n", i + 1,
                  criteria[i].first.c_str(), seconds_since(start), e.what());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d of %zu acceptance criteria FAILED\n", failures, criteria.size());
  }
  return failures;
}
