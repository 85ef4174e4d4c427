#include "trisum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "trisum/combinatorics.hpp"
#include "trisum/series.hpp"

namespace trisum::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr unsigned kDefaultDigits = 12;
constexpr unsigned kDefaultKMax = 20;
constexpr unsigned long kDefaultNMax = 100;
constexpr unsigned kDefaultJMax = 40;
// Plain summation is only timed when it needs at most this many terms.
constexpr unsigned long kNaiveTimingCap = 10'000'000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned default_digits() {
  const char* value = std::getenv(kDigitsEnvVar);
  if (value == nullptr || *value == '\0') return kDefaultDigits;
  try {
    std::size_t used = 0;
    long parsed = std::stol(value, &used);
    if (used == std::string(value).size() && parsed >= 1 && parsed <= 100000) {
      return static_cast<unsigned>(parsed);
    }
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("invalid ") + kDigitsEnvVar + " value: '" + value + "'");
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json envelope(std::string command, json params, json result, std::string exact) {
  json out;
  out["command"] = std::move(command);
  out["params"] = std::move(params);
  out["result"] = std::move(result);
  out["exact"] = std::move(exact);
  return out;
}

struct EvalOptions {
  long k = 0;
  bool alternating = false;
  long digits = 0;
};

json cmd_eval(const EvalOptions& opt) {
  const Order k(static_cast<unsigned>(opt.k));
  const auto value = opt.alternating ? series::alt_sum_closed(k) : series::sum_closed(k);
  json params{{"k", opt.k}, {"alternating", opt.alternating}, {"digits", opt.digits}};
  json result{{"divergent", value.is_divergent()}};
  if (value.is_divergent()) return envelope("eval", params, result, value.to_string());

  result["rational_part"] = value.value().rational_part().to_string();
  result["log2_coefficient"] = value.value().log2_coefficient().to_string();
  const DecimalApprox decimal = lt_to_decimal(value.value(), static_cast<unsigned>(opt.digits));
  result["decimal_error_bound"] = format_scientific_upper(decimal.error_bound);
  json out = envelope("eval", params, result, value.to_string());
  out["decimal"] = decimal.value;
  return out;
}

struct TableOptions {
  long k_max = 4;
  long n_max = 6;
  std::string format = "json";
};

std::vector<std::vector<BigInt>> triangular_grid(const TableOptions& opt) {
  std::vector<std::vector<BigInt>> grid;
  for (long k = 0; k <= opt.k_max; ++k) {
    auto& row = grid.emplace_back();
    for (long n = 1; n <= opt.n_max; ++n) {
      row.push_back(combinatorics::triangular(Order(static_cast<unsigned>(k)),
                                              Index(static_cast<unsigned long>(n))));
    }
  }
  return grid;
}

std::string table_csv(const TableOptions& opt) {
  std::ostringstream csv;
  csv << "k";
  for (long n = 1; n <= opt.n_max; ++n) csv << ',' << csv_field("n=" + std::to_string(n));
  csv << "\r\n";
  const auto grid = triangular_grid(opt);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    csv << k;
    for (const auto& value : grid[k]) csv << ',' << csv_field(value.get_str());
    csv << "\r\n";
  }
  return csv.str();
}

json cmd_table(const TableOptions& opt) {
  json rows = json::array();
  for (const auto& row : triangular_grid(opt)) {
    json cells = json::array();
    for (const auto& value : row) cells.push_back(value.get_str());
    rows.push_back(std::move(cells));
  }
  const std::string corner = rows.back().back().get<std::string>();
  return envelope("table", {{"k_max", opt.k_max}, {"n_max", opt.n_max}, {"format", opt.format}},
                  {{"rows", std::move(rows)}}, corner);
}

struct VerifyOptions {
  std::string suite = "all";
  long k_max = kDefaultKMax;
  long n_max = kDefaultNMax;
  long j_max = kDefaultJMax;
  std::string perturb;  // "J:VALUE" replaces C_J, for negative-control runs
};

CoefficientFn coefficient_source(const std::string& perturb) {
  if (perturb.empty()) return combinatorics::default_coefficients();
  const auto colon = perturb.find(':');
  unsigned index = 0;
  Rational replacement;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
    std::size_t used = 0;
    const std::string index_text = perturb.substr(0, colon);
    const long parsed = std::stol(index_text, &used);
    if (used != index_text.size() || parsed < 1) throw std::invalid_argument("bad index");
    index = static_cast<unsigned>(parsed);
    replacement = Rational::parse(perturb.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--perturb-c expects J:VALUE, got '" + perturb + "'");
  }
  return [index, replacement](unsigned j) {
    return j == index ? replacement : combinatorics::coefficient_c(j);
  };
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"partial-fraction", "harmonic",    "agreement",
                                              "connecting",       "c-recursion", "routes",
                                              "hockey-stick"};
  return names;
}

verify::IdentityReport run_suite(const std::string& name, const VerifyOptions& opt,
                                 const CoefficientFn& c) {
  const auto k = static_cast<unsigned>(opt.k_max);
  const auto n = static_cast<unsigned long>(opt.n_max);
  const auto j = static_cast<unsigned>(opt.j_max);
  if (name == "partial-fraction") return verify::verify_partial_fraction(k, n);
  if (name == "harmonic") return verify::verify_harmonic_binomial(n);
  if (name == "agreement") return verify::verify_agreement(k, c);
  if (name == "connecting") return verify::verify_connecting(k, c);
  if (name == "c-recursion") return verify::verify_c_recursion(j, c);
  if (name == "routes") return verify::verify_routes(k, c);
  if (name == "hockey-stick") return verify::verify_hockey_stick(k, n);
  throw UsageError("unknown suite: " + name);
}

std::pair<json, bool> cmd_verify(const VerifyOptions& opt) {
  std::vector<std::string> selected;
  if (opt.suite == "all") {
    selected = suite_names();
  } else {
    selected.push_back(opt.suite);
  }
  if (opt.k_max < 2) throw UsageError("--kmax must be >= 2");
  if (opt.n_max < 1) throw UsageError("--nmax must be >= 1");
  if (opt.j_max < 2) throw UsageError("--jmax must be >= 2");
  const CoefficientFn c = coefficient_source(opt.perturb);

  bool all_passed = true;
  unsigned long checked = 0;
  json reports = json::array();
  for (const auto& name : selected) {
    verify::IdentityReport report = run_suite(name, opt, c);
    all_passed = all_passed && report.passed;
    checked += report.checked;
    reports.push_back(to_json(report));
  }
  json params{{"suite", opt.suite}, {"k_max", opt.k_max}, {"n_max", opt.n_max}, {"j_max", opt.j_max}};
  if (!opt.perturb.empty()) params["perturb_c"] = opt.perturb;
  json result{{"passed", all_passed}, {"checked", checked}, {"reports", std::move(reports)}};
  return {envelope("verify", params, result, all_passed ? "passed" : "failed"), all_passed};
}

struct ConvergeOptions {
  long k = 0;
  std::string x;
  long terms = 0;
  long digits = 0;
};

json cmd_converge(const ConvergeOptions& opt) {
  Rational x;
  try {
    x = Rational::parse(opt.x);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::optional<analysis::EvalPoint> point;
  try {
    point.emplace(Order(static_cast<unsigned>(opt.k)), x);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto report = analysis::master_gap(*point, static_cast<unsigned long>(opt.terms),
                                           static_cast<unsigned>(opt.digits));
  json params{{"k", opt.k}, {"x", x.to_string()}, {"terms", opt.terms}, {"digits", opt.digits}};
  json out = envelope("converge", params, to_json(report), report.rhs_partial.to_string());
  out["decimal"] = report.lhs_value.value;
  return out;
}

struct BenchOptions {
  long k = 0;
  std::string tolerance;
};

// Plain long double partial sum; only used for timing.
long double naive_sum(unsigned k, unsigned long terms) {
  long double sum = 0;
  long double triangular = 1;
  for (unsigned long n = 1; n <= terms; ++n) {
    sum += (n % 2 == 1 ? 1.0L : -1.0L) / triangular;
    triangular = triangular * static_cast<long double>(n + k) / static_cast<long double>(n);
  }
  return sum;
}

json cmd_bench(const BenchOptions& opt, unsigned digits) {
  Rational tolerance;
  try {
    tolerance = Rational::parse(opt.tolerance);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (tolerance.sign() <= 0) throw UsageError("--tol must be positive");

  const series::SeriesSpec spec{Order(static_cast<unsigned>(opt.k)), true};
  const auto accel_start = Clock::now();
  const analysis::AccelReport report = analysis::euler_accelerate(spec, tolerance);
  const double accel_seconds = seconds_since(accel_start);

  json naive{{"terms", report.naive_terms.get_str()}, {"measured", false}, {"seconds", nullptr}};
  if (report.naive_terms <= kNaiveTimingCap) {
    const auto naive_start = Clock::now();
    volatile long double sink = naive_sum(spec.order.value(), report.naive_terms.get_ui());
    (void)sink;
    naive["measured"] = true;
    naive["seconds"] = seconds_since(naive_start);
  }

  const LogTwoLinear closed = series::alt_sum_closed(spec.order).value();
  json result{
      {"naive", std::move(naive)},
      {"accelerated",
       {{"terms", report.accel_terms},
        {"seconds", accel_seconds},
        {"value", report.accelerated_value.to_string()},
        {"error_estimate", format_scientific_upper(report.error_estimate)},
        {"achieved_error", format_scientific_upper(report.achieved_error)},
        {"within_tolerance", report.within_tolerance}}},
  };
  json params{{"k", opt.k}, {"alternating", true}, {"tol", tolerance.to_string()}};
  json out = envelope("bench", params, result, closed.to_string());
  out["decimal"] = lt_to_decimal(closed, digits).value;
  return out;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + out_path);
  file << text;
}

}  // namespace

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

json to_json(const verify::IdentityReport& report) {
  json ranges = json::object();
  for (const auto& [name, bounds] : report.ranges) ranges[name] = {bounds.first, bounds.second};
  json out{{"suite", report.suite},
           {"ranges", std::move(ranges)},
           {"checked", report.checked},
           {"passed", report.passed},
           {"counterexample", nullptr}};
  if (report.counterexample) {
    out["counterexample"] = {{"parameters", report.counterexample->parameters},
                             {"lhs", report.counterexample->lhs},
                             {"rhs", report.counterexample->rhs}};
  }
  return out;
}

json to_json(const analysis::GapReport& report) {
  return {{"rhs_partial", report.rhs_partial.to_string()},
          {"lhs", report.lhs_value.value},
          {"lhs_error_bound", format_scientific_upper(report.lhs_value.error_bound)},
          {"gap", report.gap.value},
          {"gap_upper", format_scientific_upper(report.gap_upper)},
          {"tail_bound", report.tail_bound.to_string()},
          {"tail_bound_sci", format_scientific_upper(report.tail_bound)},
          {"within_bound", report.within_bound}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sums of reciprocals of generalized triangular numbers", "trisum"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to FILE instead of stdout")->option_text("FILE");

  unsigned digits_default = kDefaultDigits;
  try {
    digits_default = default_digits();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  EvalOptions eval_opt;
  eval_opt.digits = digits_default;
  auto* eval = app.add_subcommand("eval", "Closed value of the (alternating) series");
  eval->add_option("--k", eval_opt.k, "Order k >= 0")->required()->check(CLI::NonNegativeNumber);
  eval->add_flag("--alternating", eval_opt.alternating, "Alternating signs (-1)^(n+1)");
  eval->add_option("--digits", eval_opt.digits, "Decimal digits")->check(CLI::PositiveNumber);

  TableOptions table_opt;
  auto* table = app.add_subcommand("table", "Grid of T_k(n)");
  table->add_option("--kmax", table_opt.k_max, "Largest order")->check(CLI::NonNegativeNumber);
  table->add_option("--nmax", table_opt.n_max, "Largest index")->check(CLI::PositiveNumber);
  table->add_option("--format", table_opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Exact identity sweeps");
  verify->add_option("--suite", verify_opt.suite, "Suite name or 'all'");
  verify->add_option("--kmax", verify_opt.k_max, "Largest order swept");
  verify->add_option("--nmax", verify_opt.n_max, "Largest index swept");
  verify->add_option("--jmax", verify_opt.j_max, "Largest C_j index swept");
  verify->add_option("--perturb-c", verify_opt.perturb,
                     "Replace C_J by VALUE (J:VALUE); negative control, expected to fail");

  ConvergeOptions converge_opt;
  converge_opt.digits = digits_default;
  auto* converge = app.add_subcommand("converge", "Gap between both sides of the power series identity");
  converge->add_option("--k", converge_opt.k, "Order k >= 1")->required()->check(CLI::PositiveNumber);
  converge->add_option("--x", converge_opt.x, "Rational point in [-1, 1]")->required();
  converge->add_option("--terms", converge_opt.terms, "Number of terms N")
      ->required()
      ->check(CLI::PositiveNumber);
  converge->add_option("--digits", converge_opt.digits, "Decimal digits")->check(CLI::PositiveNumber);

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Euler transform versus plain summation");
  bench->add_option("--k", bench_opt.k, "Order k >= 1")->required()->check(CLI::PositiveNumber);
  bench->add_option("--tol", bench_opt.tolerance, "Target absolute error")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table && table_opt.format == "csv") {
      emit(table_csv(table_opt), out_path, out);
      return kExitOk;
    }
    json result;
    int code = kExitOk;
    if (*eval) {
      result = cmd_eval(eval_opt);
    } else if (*table) {
      result = cmd_table(table_opt);
    } else if (*verify) {
      if (verify_opt.suite != "all" &&
          std::find(suite_names().begin(), suite_names().end(), verify_opt.suite) ==
              suite_names().end()) {
        throw UsageError("unknown suite: " + verify_opt.suite);
      }
      auto [json_out, passed] = cmd_verify(verify_opt);
      result = std::move(json_out);
      code = passed ? kExitOk : kExitVerificationFailed;
    } else if (*converge) {
      result = cmd_converge(converge_opt);
    } else if (*bench) {
      result = cmd_bench(bench_opt, digits_default);
    }
    emit(result.dump(2) + "\n", out_path, out);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace trisum::cli
