#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "invwalk/poly.hpp"
#include "invwalk/rational.hpp"

namespace invwalk::heat {

/// The five order-field models. All grid-shaped variants live on the
/// (n+1) x (n+1) matrix of pair cells (i, j), i, j in 1..n+1:
///
///  - full_grid_cross_diagonal: the pair-cell graph itself. Diagonal cells
///    carry the constant 1/2 and have no edges; cells adjacent to the
///    diagonal are wired across it, (j+1, j) <-> (j, j+1).
///  - grid_hot_diagonal: the plain grid graph with the diagonal set to 1/2
///    at t = 0. No pinning: the diagonal stays at 1/2 on its own, and the
///    process is step-for-step identical to the cross-diagonal graph.
///  - triangle_hot_boundary: the closed lower triangle i >= j with the
///    diagonal pinned at 1/2 and the outer legs insulated (missing
///    neighbours contribute nothing).
///  - diamond_hot_boundary: four mirror copies of the triangle glued along
///    the insulated legs, with every image of the diagonal pinned at 1/2.
///    The mirrors sit between lattice columns/rows, so each interior cell
///    keeps exactly four neighbours and the restriction to the base
///    triangle reproduces triangle_hot_boundary step for step.
///  - semi_infinite: the translation-invariant half-plane below an infinite
///    hot diagonal, reduced to one value per sublevel k = i - j, truncated
///    at a depth K. The heat front advances one sublevel per step, so any
///    K > t is exact for a t-step run.
enum class Variant {
  full_grid_cross_diagonal,
  grid_hot_diagonal,
  triangle_hot_boundary,
  diamond_hot_boundary,
  semi_infinite,
};

const char* variant_name(Variant v);

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool is_symbolic = false;
  static double zero() { return 0.0; }
  static double half() { return 0.5; }
  static double one() { return 1.0; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_symbolic = false;
  static Rational zero() { return Rational(0); }
  static Rational half() { return Rational(BigInt(1), BigInt(2)); }
  static Rational one() { return Rational(1); }
};

template <>
struct ScalarTraits<Poly> {
  static constexpr bool is_symbolic = true;
  static Poly zero() { return Poly(); }
  static Poly half() { return Poly::constant(Rational(BigInt(1), BigInt(2))); }
  static Poly one() { return Poly::constant(Rational(1)); }
};

/// Numeric runs only accept a conductivity in [0, 1/2] or exactly 1/n (the
/// walk's own conductivity); symbolic runs are unrestricted.
template <typename S>
void check_numeric_conductivity(const S& x, int n) {
  if constexpr (std::is_same_v<S, double>) {
    if (!((x >= 0.0 && x <= 0.5) || x == 1.0 / static_cast<double>(n))) {
      throw std::invalid_argument("conductivity must lie in [0, 1/2] or equal 1/n");
    }
  } else if constexpr (std::is_same_v<S, Rational>) {
    if (!((x >= Rational(0) && x <= Rational(BigInt(1), BigInt(2))) ||
          x == Rational(BigInt(1), BigInt(n)))) {
      throw std::invalid_argument("conductivity must lie in [0, 1/2] or equal 1/n");
    }
  }
}

using Coord = std::pair<int, int>;

/// Mirror maps of the diamond unfolding; both sit between lattice lines so
/// that a leg cell's missing neighbour becomes its own image.
inline Coord diamond_reflect_left(Coord c) { return {c.first, 1 - c.second}; }
inline Coord diamond_reflect_bottom(int n, Coord c) { return {2 * n + 3 - c.first, c.second}; }

/// State of the p_ij field for one model variant, one scalar kind, one time
/// step. Immutable: step() returns a fresh field (synchronous update with
/// double buffering).
template <typename S>
class OrderField {
 public:
  using Traits = ScalarTraits<S>;

  /// The t = 0 field: ones above the diagonal, zeroes below, 1/2 on the
  /// diagonal (grid variants); zeroes with a pinned diagonal (triangle,
  /// diamond); (1/2, 0, ..., 0) over sublevels 0..K (semi-infinite, where
  /// `truncation` = K >= 1 is required and n is ignored).
  static OrderField init(int n, Variant variant, int truncation = -1);

  int n() const { return n_; }
  Variant variant() const { return variant_; }
  int truncation() const { return truncation_; }

  bool has_cell(int i, int j) const;
  const S& at(int i, int j) const;
  /// Semi-infinite only: value at sublevel k, 0 <= k <= K.
  const S& sublevel(int k) const;

  /// One synchronous heat-flow step with conductivity x: every cell sends
  /// the fraction x of its value to each neighbour and receives the same
  /// fraction of theirs. Pinned cells are re-imposed after the update.
  OrderField step(const S& x) const;

  /// Total heat strictly below the main diagonal (for the diamond, of the
  /// base triangle). This is the expected inversion count when x = 1/n.
  S total_subdiagonal_heat() const;

  /// Sum over the n first-subdiagonal cells (j+1, j) only.
  S first_subdiagonal_sum() const;

  /// Sum over every stored cell (grid variants conserve this).
  S total_heat() const;

  /// Visits every stored pair cell as f(i, j, value); not for semi-infinite.
  template <typename F>
  void for_each_cell(F&& f) const;

  bool operator==(const OrderField& rhs) const = default;

 private:
  OrderField() = default;

  int side() const { return n_ + 1; }
  bool in_grid(int i, int j) const { return i >= 1 && i <= side() && j >= 1 && j <= side(); }
  std::size_t grid_index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(side()) +
           static_cast<std::size_t>(j - 1);
  }
  std::size_t triangle_index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(i) / 2 +
           static_cast<std::size_t>(j - 1);
  }
  bool diamond_hot(int i, int j) const {
    return i == j || i + j == 1 || i + j == 2 * n_ + 3 || i - j == 2 * n_ + 2;
  }

  OrderField step_grid(const S& x) const;
  OrderField step_triangle(const S& x) const;
  OrderField step_diamond(const S& x) const;
  OrderField step_semi_infinite(const S& x) const;

  int n_ = 0;
  Variant variant_ = Variant::grid_hot_diagonal;
  int truncation_ = 0;
  std::vector<S> cells_;             // grid (dense), triangle (packed rows), semi-infinite
  std::map<Coord, S> diamond_cells_;  // diamond only

  template <typename T>
  friend OrderField<T> unfold_to_diamond(int n);
};

/// Four mirror copies of the triangle model at t = 0 (method of images).
template <typename S>
OrderField<S> unfold_to_diamond(int n);

template <typename S>
struct HeatRunReport {
  /// total_heat[tau] is E after tau steps, tau = 0..t (so total_heat[0] = 0).
  std::vector<S> total_heat;
  /// subdiagonal_sums[tau - 1] is e_tau, the first-subdiagonal sum after tau
  /// steps, tau = 1..t.
  std::vector<S> subdiagonal_sums;
  OrderField<S> final_field;
};

/// Runs t steps from the t = 0 field. Numeric scalar kinds are range-checked
/// (see check_numeric_conductivity); the semi-infinite variant has no
/// per-step E and is rejected here — drive it with run_semi_infinite.
template <typename S>
HeatRunReport<S> run(int n, long long t, const S& x, Variant variant);

/// Steps the 1-D semi-infinite model t times and returns the final field.
/// The truncation defaults to K = t + 1, which is exact.
template <typename S>
OrderField<S> run_semi_infinite(long long t, const S& x, int truncation = -1);

// ---------------------------------------------------------------------------
// implementation

template <typename S>
OrderField<S> OrderField<S>::init(int n, Variant variant, int truncation) {
  if (variant == Variant::semi_infinite) {
    if (truncation < 1) {
      throw std::invalid_argument("semi-infinite field requires a truncation depth K >= 1");
    }
    OrderField f;
    f.n_ = 0;
    f.variant_ = variant;
    f.truncation_ = truncation;
    f.cells_.assign(static_cast<std::size_t>(truncation) + 1, Traits::zero());
    f.cells_[0] = Traits::half();
    return f;
  }
  if (n < 1) throw std::invalid_argument("order field requires n >= 1");
  if (variant == Variant::diamond_hot_boundary) return unfold_to_diamond<S>(n);

  OrderField f;
  f.n_ = n;
  f.variant_ = variant;
  const int m = n + 1;
  if (variant == Variant::triangle_hot_boundary) {
    f.cells_.assign(static_cast<std::size_t>(m) * (m + 1) / 2, Traits::zero());
    for (int i = 1; i <= m; ++i) f.cells_[f.triangle_index(i, i)] = Traits::half();
  } else {
    f.cells_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), Traits::zero());
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        if (i < j) {
          f.cells_[f.grid_index(i, j)] = Traits::one();
        } else if (i == j) {
          f.cells_[f.grid_index(i, j)] = Traits::half();
        }
      }
    }
  }
  return f;
}

template <typename S>
OrderField<S> unfold_to_diamond(int n) {
  if (n < 1) throw std::invalid_argument("order field requires n >= 1");
  OrderField<S> f;
  f.n_ = n;
  f.variant_ = Variant::diamond_hot_boundary;
  using Traits = ScalarTraits<S>;
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j <= i; ++j) {
      const S value = (i == j) ? Traits::half() : Traits::zero();
      const Coord base{i, j};
      const Coord images[4] = {base, diamond_reflect_left(base), diamond_reflect_bottom(n, base),
                               diamond_reflect_bottom(n, diamond_reflect_left(base))};
      for (const Coord& c : images) f.diamond_cells_.insert({c, value});
    }
  }
  return f;
}

template <typename S>
bool OrderField<S>::has_cell(int i, int j) const {
  switch (variant_) {
    case Variant::full_grid_cross_diagonal:
    case Variant::grid_hot_diagonal:
      return in_grid(i, j);
    case Variant::triangle_hot_boundary:
      return in_grid(i, j) && i >= j;
    case Variant::diamond_hot_boundary:
      return diamond_cells_.contains({i, j});
    case Variant::semi_infinite:
      return false;
  }
  return false;
}

template <typename S>
const S& OrderField<S>::at(int i, int j) const {
  if (!has_cell(i, j)) {
    throw std::out_of_range("no cell (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") in this " + std::string(variant_name(variant_)) + " field");
  }
  switch (variant_) {
    case Variant::full_grid_cross_diagonal:
    case Variant::grid_hot_diagonal:
      return cells_[grid_index(i, j)];
    case Variant::triangle_hot_boundary:
      return cells_[triangle_index(i, j)];
    default:
      return diamond_cells_.at({i, j});
  }
}

template <typename S>
const S& OrderField<S>::sublevel(int k) const {
  if (variant_ != Variant::semi_infinite) {
    throw std::invalid_argument("sublevel access requires the semi-infinite variant");
  }
  if (k < 0 || k > truncation_) {
    throw std::out_of_range("sublevel " + std::to_string(k) + " outside 0.." +
                            std::to_string(truncation_));
  }
  return cells_[static_cast<std::size_t>(k)];
}

template <typename S>
OrderField<S> OrderField<S>::step(const S& x) const {
  switch (variant_) {
    case Variant::full_grid_cross_diagonal:
    case Variant::grid_hot_diagonal:
      return step_grid(x);
    case Variant::triangle_hot_boundary:
      return step_triangle(x);
    case Variant::diamond_hot_boundary:
      return step_diamond(x);
    case Variant::semi_infinite:
      return step_semi_infinite(x);
  }
  throw std::logic_error("unreachable");
}

template <typename S>
OrderField<S> OrderField<S>::step_grid(const S& x) const {
  const bool cross = variant_ == Variant::full_grid_cross_diagonal;
  const int m = side();
  OrderField out = *this;
  static constexpr int kDirs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (cross && i == j) continue;  // no edges: the diagonal is static
      const S& p = cells_[grid_index(i, j)];
      S acc = Traits::zero();
      for (const auto& d : kDirs) {
        const int i2 = i + d[0];
        const int j2 = j + d[1];
        if (!in_grid(i2, j2)) continue;
        if (cross && i2 == j2) continue;
        acc += cells_[grid_index(i2, j2)] - p;
      }
      if (cross && (i - j == 1 || j - i == 1)) {
        acc += cells_[grid_index(j, i)] - p;  // the edge across the diagonal
      }
      out.cells_[grid_index(i, j)] = p + x * acc;
    }
  }
  return out;
}

template <typename S>
OrderField<S> OrderField<S>::step_triangle(const S& x) const {
  const int m = side();
  OrderField out = *this;
  static constexpr int kDirs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  for (int i = 2; i <= m; ++i) {
    for (int j = 1; j < i; ++j) {
      const S& p = cells_[triangle_index(i, j)];
      S acc = Traits::zero();
      for (const auto& d : kDirs) {
        const int i2 = i + d[0];
        const int j2 = j + d[1];
        if (!in_grid(i2, j2) || i2 < j2) continue;  // insulated legs
        acc += cells_[triangle_index(i2, j2)] - p;
      }
      out.cells_[triangle_index(i, j)] = p + x * acc;
    }
  }
  for (int i = 1; i <= m; ++i) out.cells_[triangle_index(i, i)] = Traits::half();  // pinned
  return out;
}

template <typename S>
OrderField<S> OrderField<S>::step_diamond(const S& x) const {
  OrderField out = *this;
  static constexpr int kDirs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  for (const auto& [coord, p] : diamond_cells_) {
    if (diamond_hot(coord.first, coord.second)) continue;
    S acc = Traits::zero();
    for (const auto& d : kDirs) {
      acc += diamond_cells_.at({coord.first + d[0], coord.second + d[1]}) - p;
    }
    out.diamond_cells_.at(coord) = p + x * acc;
  }
  for (auto& [coord, value] : out.diamond_cells_) {
    if (diamond_hot(coord.first, coord.second)) value = Traits::half();  // pinned
  }
  return out;
}

template <typename S>
OrderField<S> OrderField<S>::step_semi_infinite(const S& x) const {
  // Every cell on sublevel k has two neighbours on sublevel k-1 and two on
  // k+1; translation invariance along the diagonal gives the 1-D rule
  // p'_k = p_k + x(2 p_{k-1} + 2 p_{k+1} - 4 p_k), with p_0 pinned at 1/2
  // and everything beyond the truncation treated as cold.
  OrderField out = *this;
  const S cold = Traits::zero();
  for (int k = 1; k <= truncation_; ++k) {
    const S& p = cells_[static_cast<std::size_t>(k)];
    const S& up = cells_[static_cast<std::size_t>(k - 1)];
    const S& down = (k + 1 <= truncation_) ? cells_[static_cast<std::size_t>(k + 1)] : cold;
    S acc = up - p;
    acc += up - p;
    acc += down - p;
    acc += down - p;
    out.cells_[static_cast<std::size_t>(k)] = p + x * acc;
  }
  out.cells_[0] = Traits::half();  // pinned
  return out;
}

template <typename S>
S OrderField<S>::total_subdiagonal_heat() const {
  if (variant_ == Variant::semi_infinite) {
    throw std::invalid_argument(
        "total subdiagonal heat is undefined for the semi-infinite field; "
        "use the semi-infinite closed-form total heat instead");
  }
  S sum = Traits::zero();
  const int m = side();
  for (int i = 2; i <= m; ++i) {
    for (int j = 1; j < i; ++j) sum += at(i, j);
  }
  return sum;
}

template <typename S>
S OrderField<S>::first_subdiagonal_sum() const {
  if (variant_ == Variant::semi_infinite) {
    throw std::invalid_argument("first-subdiagonal sum is undefined for the semi-infinite field");
  }
  S sum = Traits::zero();
  for (int j = 1; j <= n_; ++j) sum += at(j + 1, j);
  return sum;
}

template <typename S>
S OrderField<S>::total_heat() const {
  S sum = Traits::zero();
  if (variant_ == Variant::diamond_hot_boundary) {
    for (const auto& [coord, value] : diamond_cells_) sum += value;
  } else {
    for (const S& value : cells_) sum += value;
  }
  return sum;
}

template <typename S>
template <typename F>
void OrderField<S>::for_each_cell(F&& f) const {
  switch (variant_) {
    case Variant::full_grid_cross_diagonal:
    case Variant::grid_hot_diagonal:
      for (int i = 1; i <= side(); ++i) {
        for (int j = 1; j <= side(); ++j) f(i, j, cells_[grid_index(i, j)]);
      }
      break;
    case Variant::triangle_hot_boundary:
      for (int i = 1; i <= side(); ++i) {
        for (int j = 1; j <= i; ++j) f(i, j, cells_[triangle_index(i, j)]);
      }
      break;
    case Variant::diamond_hot_boundary:
      for (const auto& [coord, value] : diamond_cells_) f(coord.first, coord.second, value);
      break;
    case Variant::semi_infinite:
      throw std::invalid_argument("cell iteration requires a pair-cell variant");
  }
}

template <typename S>
HeatRunReport<S> run(int n, long long t, const S& x, Variant variant) {
  if (t < 0) throw std::invalid_argument("run requires t >= 0");
  if (variant == Variant::semi_infinite) {
    throw std::invalid_argument(
        "run() has no per-step total heat for the semi-infinite variant; "
        "use run_semi_infinite and the closed-form total heat");
  }
  check_numeric_conductivity(x, n);
  OrderField<S> field = OrderField<S>::init(n, variant);
  HeatRunReport<S> report{.total_heat = {field.total_subdiagonal_heat()},
                          .subdiagonal_sums = {},
                          .final_field = field};
  for (long long tau = 1; tau <= t; ++tau) {
    field = field.step(x);
    report.total_heat.push_back(field.total_subdiagonal_heat());
    report.subdiagonal_sums.push_back(field.first_subdiagonal_sum());
  }
  report.final_field = std::move(field);
  return report;
}

template <typename S>
OrderField<S> run_semi_infinite(long long t, const S& x, int truncation) {
  if (t < 0) throw std::invalid_argument("run requires t >= 0");
  if (truncation < 1) truncation = static_cast<int>(t) + 1;  // exact: front moves 1/step
  OrderField<S> field = OrderField<S>::init(0, Variant::semi_infinite, truncation);
  for (long long tau = 0; tau < t; ++tau) field = field.step(x);
  return field;
}

}  // namespace invwalk::heat
