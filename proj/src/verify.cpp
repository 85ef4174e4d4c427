#include "trisum/verify.hpp"

#include <stdexcept>

#include "trisum/series.hpp"

namespace trisum::verify {

namespace {

using combinatorics::binomial;
using combinatorics::falling_factorial;
using combinatorics::harmonic;

// Accumulates checks for one suite; keeps only the first failure.
class Sweep {
 public:
  explicit Sweep(std::string suite) { report_.suite = std::move(suite); }

  void range(std::string name, long lo, long hi) {
    report_.ranges.emplace_back(std::move(name), std::make_pair(lo, hi));
  }

  // Returns false once a counterexample has been recorded.
  template <typename T>
  bool check(const T& lhs, const T& rhs, std::map<std::string, long> parameters) {
    ++report_.checked;
    if (lhs == rhs) return true;
    report_.counterexample = Counterexample{std::move(parameters), lhs.to_string(), rhs.to_string()};
    return false;
  }

  IdentityReport finish() {
    report_.passed = !report_.counterexample && report_.checked >= 1;
    return std::move(report_);
  }

 private:
  IdentityReport report_;
};

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

BigInt power_of_two(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

}  // namespace

IdentityReport verify_partial_fraction(unsigned k_max, unsigned long n_max) {
  require(k_max >= 2 && n_max >= 1, "partial-fraction sweep needs k_max >= 2, n_max >= 1");
  Sweep sweep("partial-fraction");
  sweep.range("k", 2, k_max);
  sweep.range("n", 1, static_cast<long>(n_max));
  for (unsigned k = 2; k <= k_max; ++k) {
    for (unsigned long n = 1; n <= n_max; ++n) {
      const Rational lhs(BigInt(1), combinatorics::triangular(Order(k), Index(n)));
      const auto [first, second] = series::partial_fraction_split(Order(k), Index(n));
      if (!sweep.check(lhs, first + second, {{"k", k}, {"n", static_cast<long>(n)}})) {
        return sweep.finish();
      }
    }
  }
  return sweep.finish();
}

IdentityReport verify_harmonic_binomial(unsigned long n_max) {
  Sweep sweep("harmonic");
  sweep.range("n", 0, static_cast<long>(n_max));
  for (unsigned long n = 0; n <= n_max; ++n) {
    Rational lhs = 0;
    for (unsigned long m = 0; m <= n; ++m) lhs += Rational(binomial(n, m)) * harmonic(m);
    Rational rhs = Rational(power_of_two(n)) * harmonic(n);
    for (unsigned long i = 1; i <= n; ++i) rhs -= Rational(power_of_two(n - i), BigInt(i));
    if (!sweep.check(lhs, rhs, {{"n", static_cast<long>(n)}})) return sweep.finish();
  }
  return sweep.finish();
}

IdentityReport verify_agreement(unsigned k_max, const CoefficientFn& c) {
  require(k_max >= 2, "agreement sweep needs k_max >= 2");
  Sweep sweep("agreement");
  sweep.range("k", 2, k_max);
  for (unsigned k = 2; k <= k_max; ++k) {
    Rational full = 0;
    Rational normalized = 0;
    for (unsigned j = 1; j <= k; ++j) {
      const Rational cj = c(j);
      full += cj * Rational(falling_factorial(k, j));
      normalized += cj * Rational(falling_factorial(k - 1, j - 1));
    }
    const std::map<std::string, long> at{{"k", k}};
    if (full != Rational(BigInt(k), BigInt(k - 1))) {
      sweep.check(full, Rational(BigInt(k), BigInt(k - 1)), at);
      return sweep.finish();
    }
    if (!sweep.check(normalized, Rational(BigInt(1), BigInt(k - 1)), at)) return sweep.finish();
  }
  return sweep.finish();
}

IdentityReport verify_connecting(unsigned k_max, const CoefficientFn& c) {
  require(k_max >= 2, "connecting sweep needs k_max >= 2");
  Sweep sweep("connecting");
  sweep.range("k", 2, k_max);
  for (unsigned k = 2; k <= k_max; ++k) {
    const LogTwoLinear lhs = series::alt_sum_power_series(Order(k), c).value();
    const LogTwoLinear rhs = series::alt_sum_closed(Order(k)).value();
    if (!sweep.check(lhs, rhs, {{"k", k}})) return sweep.finish();
  }
  return sweep.finish();
}

IdentityReport verify_c_recursion(unsigned j_max, const CoefficientFn& c) {
  require(j_max >= 2, "c-recursion sweep needs j_max >= 2");
  Sweep sweep("c-recursion");
  sweep.range("j", 1, j_max);
  for (unsigned j = 1; j <= j_max; ++j) {
    if (!sweep.check(c(j), combinatorics::coefficient_c_recursive(j), {{"j", j}})) {
      return sweep.finish();
    }
  }
  return sweep.finish();
}

IdentityReport verify_routes(unsigned k_max, const CoefficientFn& c) {
  require(k_max >= 2, "routes sweep needs k_max >= 2");
  Sweep sweep("routes");
  sweep.range("k", 2, k_max);
  sweep.range("pair", 0, 2);
  for (unsigned k = 2; k <= k_max; ++k) {
    const Order order(k);
    const auto closed = series::sum_closed(order).value();
    const auto alt_closed = series::alt_sum_closed(order).value();
    if (!sweep.check(closed, series::sum_power_series(order, c).value(), {{"k", k}, {"pair", 0}}) ||
        !sweep.check(alt_closed, series::alt_sum_recursive(order).value(), {{"k", k}, {"pair", 1}}) ||
        !sweep.check(alt_closed, series::alt_sum_power_series(order, c).value(),
                     {{"k", k}, {"pair", 2}})) {
      return sweep.finish();
    }
  }
  return sweep.finish();
}

IdentityReport verify_hockey_stick(unsigned k_max, unsigned long n_max) {
  require(k_max >= 1 && n_max >= 1, "hockey-stick sweep needs k_max >= 1, n_max >= 1");
  Sweep sweep("hockey-stick");
  sweep.range("k", 1, k_max);
  sweep.range("n", 1, static_cast<long>(n_max));
  for (unsigned k = 1; k <= k_max; ++k) {
    Rational running = 0;
    for (unsigned long n = 1; n <= n_max; ++n) {
      running += Rational(binomial(n + k - 1, k));
      if (!sweep.check(running, Rational(binomial(n + k, k + 1)),
                       {{"k", k}, {"n", static_cast<long>(n)}})) {
        return sweep.finish();
      }
    }
  }
  return sweep.finish();
}

}  // namespace trisum::verify
