// invwalk: expected inversions of a random adjacent-transposition walk,
// computed exactly (heat-flow dynamic programming, closed-form bounds,
// integer-sequence extraction) or stochastically (seeded Monte Carlo).

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "invwalk/closedform.hpp"
#include "invwalk/errors.hpp"
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

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Field {
  std::string key;
  std::string value;
  bool is_string = true;  // jsonl: quoted string vs raw number
};
using Row = std::vector<Field>;

void write_csv(std::ostream& os, const std::vector<Row>& rows) {
  if (rows.empty()) return;
  for (std::size_t i = 0; i < rows.front().size(); ++i) {
    os << (i ? "," : "") << rows.front()[i].key;
  }
  os << '\n';
  for (const Row& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].value;
    os << '\n';
  }
}

void write_jsonl(std::ostream& os, const std::vector<Row>& rows) {
  // All emitted values come from a quote-free character set, so no escaping
  // is required.
  for (const Row& row : rows) {
    os << '{';
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << '"' << row[i].key << "\":";
      if (row[i].is_string) {
        os << '"' << row[i].value << '"';
      } else {
        os << row[i].value;
      }
    }
    os << "}\n";
  }
}

void write_rows(std::ostream& os, const std::string& format, const std::vector<Row>& rows) {
  if (format == "jsonl") {
    write_jsonl(os, rows);
  } else {
    write_csv(os, rows);
  }
}

struct OutputStream {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::invalid_argument("cannot open output file: " + path);
      os = &file;
    }
  }
};

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      long long v = std::stoll(text);
      return {v, v};
    }
    long long lo = std::stoll(text.substr(0, colon));
    long long hi = std::stoll(text.substr(colon + 1));
    if (lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid range \"" + text + "\"; expected a:b (inclusive) or a");
  }
}

Rational rational_x(const std::string& text, int n) {
  if (text == "1/n") return Rational(BigInt(1), BigInt(n));
  return Rational::parse(text);  // rejects floating-point input
}

double float_x(const std::string& text, int n) {
  if (text == "1/n") return 1.0 / static_cast<double>(n);
  try {
    return Rational::parse(text).to_double();
  } catch (const std::exception&) {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("invalid conductivity \"" + text + "\"");
    return v;
  }
}

std::uint64_t enumeration_budget() {
  const char* env = std::getenv("INVWALK_ENUM_BUDGET");
  if (env == nullptr || *env == '\0') return perm::kDefaultEnumerationBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    throw std::invalid_argument("INVWALK_ENUM_BUDGET must be a positive integer");
  }
  return v;
}

struct ExactArgs {
  int n = 1;
  long long t = 0;
  std::string x = "1/n";
  std::string mode = "rational";
  std::string format = "plain";
  std::string output;
  bool dump_matrix = false;
  bool oracle = false;
};

void dump_matrix_csv(std::ostream& os, const auto& field, auto&& value_str) {
  os << "i,j,value\n";
  field.for_each_cell([&](int i, int j, const auto& v) { os << i << ',' << j << ',' << value_str(v) << '\n'; });
}

int cmd_exact(const ExactArgs& args) {
  OutputStream out(args.output);
  Row row{{"n", std::to_string(args.n), false}, {"t", std::to_string(args.t), false},
          {"mode", args.mode, true}};

  std::string e_text;
  std::optional<BigInt> oracle_total;
  if (args.mode == "poly") {
    rational_x(args.x, args.n);  // validates the flag even though it is unused
    auto report = heat::run<Poly>(args.n, args.t, Poly::x(), heat::Variant::grid_hot_diagonal);
    e_text = report.total_heat.back().str();
    row.push_back({"x", "x", true});
    row.push_back({"E", e_text, true});
    if (args.format == "plain") *out.os << "E(x)=" << e_text << '\n';
    if (args.dump_matrix) {
      dump_matrix_csv(*out.os, report.final_field, [](const Poly& p) { return p.machine_str(); });
    }
  } else if (args.mode == "float") {
    double x = float_x(args.x, args.n);
    auto report = heat::run<double>(args.n, args.t, x, heat::Variant::grid_hot_diagonal);
    e_text = fmt_double(report.total_heat.back());
    row.push_back({"x", fmt_double(x), false});
    row.push_back({"E", e_text, false});
    if (args.format == "plain") *out.os << "E=" << e_text << '\n';
    if (args.dump_matrix) {
      dump_matrix_csv(*out.os, report.final_field, [](double v) { return fmt_double(v); });
    }
  } else {
    Rational x = rational_x(args.x, args.n);
    auto report = heat::run<Rational>(args.n, args.t, x, heat::Variant::grid_hot_diagonal);
    Rational e = report.total_heat.back();
    e_text = e.str();
    row.push_back({"x", x.str(), true});
    row.push_back({"E", e_text, true});
    if (args.oracle) {
      if (!(x == Rational(BigInt(1), BigInt(args.n)))) {
        throw std::invalid_argument("--oracle cross-checks the walk itself and requires x = 1/n");
      }
      BigInt total =
          perm::enumerate_total_inversions(args.n, args.t, enumeration_budget());
      Rational scaled = e * Rational(invwalk::int_pow(BigInt(args.n),
                                                      static_cast<unsigned long long>(args.t)));
      if (!(scaled == Rational(total))) {
        throw invwalk::math_assertion_error(
            "exhaustive enumeration total " + total.str() + " does not match n^t * E = " +
            scaled.str() + " at n = " + std::to_string(args.n) + ", t = " + std::to_string(args.t));
      }
      oracle_total = std::move(total);
      row.push_back({"oracle_total", oracle_total->str(), false});
    }
    if (args.format == "plain") {
      *out.os << "E=" << e_text << '\n';
      if (oracle_total) *out.os << "oracle_total=" << oracle_total->str() << '\n';
    }
    if (args.dump_matrix) {
      dump_matrix_csv(*out.os, report.final_field, [](const Rational& v) { return v.str(); });
    }
  }
  if (args.format != "plain") write_rows(*out.os, args.format, {row});
  return 0;
}

struct SimulateArgs {
  int n = 1;
  long long t = 0;
  long long samples = 100000;
  std::uint64_t seed = 0;
  int shards = 1;
  std::string format = "plain";
  std::string output;
};

int cmd_simulate(const SimulateArgs& args) {
  perm::WalkSpec spec{args.n, args.t, args.seed, args.samples, args.shards};
  perm::McEstimate est = perm::monte_carlo_E(spec);
  OutputStream out(args.output);
  if (args.format == "plain") {
    *out.os << "mean=" << fmt_double(est.mean) << " stderr=" << fmt_double(est.std_error)
            << " samples=" << est.samples << " seed=" << est.seed << " shards=" << args.shards
            << '\n';
    return 0;
  }
  Row row{{"mean", fmt_double(est.mean), false},
          {"stderr", fmt_double(est.std_error), false},
          {"samples", std::to_string(est.samples), false},
          {"seed", std::to_string(est.seed), false},
          {"shards", std::to_string(args.shards), false}};
  write_rows(*out.os, args.format, {row});
  return 0;
}

struct BoundsArgs {
  int n = 1;
  long long t = 0;
  std::string format = "csv";
  std::string output;
};

int cmd_bounds(const BoundsArgs& args) {
  Rational lower = cf::theorem_lower_bound(args.n, static_cast<int>(args.t));
  Rational exact = extract::exact_E(args.n, args.t);
  Rational upper = cf::theorem_upper_bound(args.n, static_cast<int>(args.t));
  if (!(lower <= exact && exact <= upper)) {
    throw invwalk::math_assertion_error(
        "bound sandwich violated at n = " + std::to_string(args.n) + ", t = " +
        std::to_string(args.t) + ": lower " + lower.str() + ", exact " + exact.str() +
        ", upper " + upper.str() + " (the closed-form bounds assume n >= t)");
  }
  OutputStream out(args.output);
  Row row{{"n", std::to_string(args.n), false},
          {"t", std::to_string(args.t), false},
          {"lower", lower.str(), true},
          {"exact", exact.str(), true},
          {"upper", upper.str(), true}};
  write_rows(*out.os, args.format, {row});
  return 0;
}

struct ExtractArgs {
  std::string kind;
  int t = 2;
  std::vector<int> n_set;
  std::string format = "csv";
  std::string output;
};

int cmd_extract(const ExtractArgs& args) {
  std::vector<extract::SequenceRow> rows;
  if (args.kind == "d") {
    rows = extract::sequence_rows(extract::extract_d(args.t));
  } else {
    std::vector<int> n_set = args.n_set;
    if (n_set.empty()) n_set = {args.t, args.t + 1, args.t + 2};
    rows = extract::sequence_rows(extract::extract_g(args.t, n_set));
  }
  OutputStream out(args.output);
  if (args.format == "csv") {
    extract::write_sequences_csv(*out.os, rows);
    return 0;
  }
  std::vector<Row> out_rows;
  for (const auto& r : rows) {
    std::string n_set_text;
    for (std::size_t i = 0; i < r.source_n.size(); ++i) {
      if (i) n_set_text += '|';
      n_set_text += std::to_string(r.source_n[i]);
    }
    out_rows.push_back({{"kind", std::string(1, r.kind), true},
                        {"r", std::to_string(r.r), false},
                        {"value", r.value.str(), true},
                        {"source_t", std::to_string(r.source_t), false},
                        {"source_n_set", n_set_text, true}});
  }
  write_rows(*out.os, args.format, out_rows);
  return 0;
}

struct TableArgs {
  std::string n_range;
  std::string t_range;
  std::string x = "1/n";
  std::string mode = "rational";
  std::string format = "csv";
  std::string output;
};

int cmd_table(const TableArgs& args) {
  auto [n_lo, n_hi] = parse_range(args.n_range);
  auto [t_lo, t_hi] = parse_range(args.t_range);
  if (n_lo < 1 || t_lo < 0) throw std::invalid_argument("table requires n >= 1 and t >= 0");

  std::vector<Row> rows;
  for (long long n = n_lo; n <= n_hi; ++n) {
    const int ni = static_cast<int>(n);
    std::vector<std::string> column;  // E for t = t_lo..t_hi, one run per n
    if (args.mode == "poly") {
      auto report = heat::run<Poly>(ni, t_hi, Poly::x(), heat::Variant::triangle_hot_boundary);
      for (long long t = t_lo; t <= t_hi; ++t) {
        column.push_back(report.total_heat[static_cast<std::size_t>(t)].str());
      }
    } else if (args.mode == "float") {
      auto report = heat::run<double>(ni, t_hi, float_x(args.x, ni),
                                      heat::Variant::triangle_hot_boundary);
      for (long long t = t_lo; t <= t_hi; ++t) {
        column.push_back(fmt_double(report.total_heat[static_cast<std::size_t>(t)]));
      }
    } else {
      auto report = heat::run<Rational>(ni, t_hi, rational_x(args.x, ni),
                                        heat::Variant::triangle_hot_boundary);
      for (long long t = t_lo; t <= t_hi; ++t) {
        column.push_back(report.total_heat[static_cast<std::size_t>(t)].str());
      }
    }
    for (long long t = t_lo; t <= t_hi; ++t) {
      rows.push_back({{"n", std::to_string(n), false},
                      {"t", std::to_string(t), false},
                      {"E", column[static_cast<std::size_t>(t - t_lo)], args.mode != "float"}});
    }
  }
  OutputStream out(args.output);
  write_rows(*out.os, args.format, rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expected inversions after random adjacent transpositions"};
  app.require_subcommand(1);

  ExactArgs exact_args;
  auto* exact = app.add_subcommand(
      "exact", "Exact E via the heat-flow recursion on the pair-probability grid");
  exact->add_option("--n", exact_args.n, "number of adjacent transpositions (walk on S_{n+1})")
      ->required()
      ->check(CLI::PositiveNumber);
  exact->add_option("--t", exact_args.t, "number of walk steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  exact->add_option("--x", exact_args.x,
                    "conductivity: exact rational \"p/q\" or the literal \"1/n\" (default 1/n)");
  exact->add_option("--mode", exact_args.mode, "scalar kind (default rational)")
      ->check(CLI::IsMember({"rational", "float", "poly"}));
  exact->add_option("--format", exact_args.format, "output format (default plain)")
      ->check(CLI::IsMember({"plain", "csv", "jsonl"}));
  exact->add_option("--output", exact_args.output, "write to file instead of stdout");
  exact->add_flag("--dump-matrix", exact_args.dump_matrix,
                  "also dump the full cell matrix as CSV (header i,j,value)");
  exact->add_flag("--oracle", exact_args.oracle,
                  "cross-check E against exhaustive enumeration of all n^t walks "
                  "(rational mode, x = 1/n; budget via INVWALK_ENUM_BUDGET)");

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of E from seeded walks");
  simulate->add_option("--n", sim_args.n, "number of adjacent transpositions")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--t", sim_args.t, "number of walk steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--samples", sim_args.samples, "number of sampled walks (default 100000)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_args.seed, "base RNG seed (default 0)");
  simulate->add_option("--shards", sim_args.shards,
                       "independent RNG shards, combined in shard order (default 1)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--format", sim_args.format, "output format (default plain)")
      ->check(CLI::IsMember({"plain", "csv", "jsonl"}));
  simulate->add_option("--output", sim_args.output, "write to file instead of stdout");

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand(
      "bounds", "Closed-form lower/upper bounds next to the exact value (valid for n >= t)");
  bounds->add_option("--n", bounds_args.n, "number of adjacent transpositions")
      ->required()
      ->check(CLI::PositiveNumber);
  bounds->add_option("--t", bounds_args.t, "number of walk steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  bounds->add_option("--format", bounds_args.format, "output format (default csv)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  bounds->add_option("--output", bounds_args.output, "write to file instead of stdout");

  ExtractArgs extract_args;
  auto* extract_cmd = app.add_subcommand(
      "extract", "Recover the integer sequences behind the exact closed form");
  extract_cmd->add_option("--kind", extract_args.kind, "d or g")
      ->required()
      ->check(CLI::IsMember({"d", "g"}));
  extract_cmd->add_option("--t", extract_args.t, "step count to extract from (t >= 2)")
      ->required();
  extract_cmd
      ->add_option("--n-set", extract_args.n_set,
                   "comma-separated widths for g extraction (>= 3 values, all >= t; "
                   "default t,t+1,t+2)")
      ->delimiter(',');
  extract_cmd->add_option("--format", extract_args.format, "output format (default csv)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  extract_cmd->add_option("--output", extract_args.output, "write to file instead of stdout");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "E over a Cartesian (n, t) range, plot-ready");
  table->add_option("--n", table_args.n_range, "width range a:b (inclusive) or a")->required();
  table->add_option("--t", table_args.t_range, "step range a:b (inclusive) or a")->required();
  table->add_option("--x", table_args.x,
                    "conductivity: exact rational \"p/q\" or the literal \"1/n\" (default 1/n)");
  table->add_option("--mode", table_args.mode, "scalar kind (default rational)")
      ->check(CLI::IsMember({"rational", "float", "poly"}));
  table->add_option("--format", table_args.format, "output format (default csv)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  table->add_option("--output", table_args.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (exact->parsed()) return cmd_exact(exact_args);
    if (simulate->parsed()) return cmd_simulate(sim_args);
    if (bounds->parsed()) return cmd_bounds(bounds_args);
    if (extract_cmd->parsed()) return cmd_extract(extract_args);
    if (table->parsed()) return cmd_table(table_args);
  } catch (const invwalk::budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const invwalk::math_assertion_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
