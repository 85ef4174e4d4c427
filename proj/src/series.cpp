#include "trisum/series.hpp"

#include "fraction_accumulator.hpp"
#include "prefix_cache.hpp"

namespace trisum::series {

namespace {

using combinatorics::factorial;
using combinatorics::falling_factorial;

Rational order_ratio(unsigned k) {
  return Rational(BigInt(k), BigInt(k - 1));
}

BigInt power_of_two(unsigned exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

// Entry i holds S_{i+1}, the alternating sum for order i+1.
detail::PrefixCache<LogTwoLinear>& recursion_table() {
  static detail::PrefixCache<LogTwoLinear> table(
      LogTwoLinear::log2(), [](std::size_t i, const LogTwoLinear& previous) {
        const auto k = static_cast<unsigned>(i + 1);
        return order_ratio(k) * (Rational(2) * previous - LogTwoLinear(1));
      });
  return table;
}

}  // namespace

const LogTwoLinear& SeriesValue::value() const {
  if (!value_) throw std::logic_error("value() of a divergent series");
  return *value_;
}

std::string SeriesValue::to_string() const {
  return value_ ? value_->to_string() : "divergent";
}

SeriesValue sum_closed(Order k) {
  if (k.value() <= 1) return SeriesValue::divergent();
  return SeriesValue::finite(order_ratio(k.value()));
}

SeriesValue alt_sum_closed(Order k) {
  const unsigned order = k.value();
  if (order == 0) return SeriesValue::divergent();
  Rational tail = 0;
  for (unsigned i = 1; i < order; ++i) {
    tail += Rational(power_of_two(order - 1 - i), BigInt(i));
  }
  const Rational kk(static_cast<long>(order));
  return SeriesValue::finite({-kk * tail, kk * Rational(power_of_two(order - 1))});
}

SeriesValue alt_sum_recursive(Order k) {
  if (k.value() == 0) return SeriesValue::divergent();
  return SeriesValue::finite(recursion_table().get(k.value() - 1));
}

SeriesValue sum_power_series(Order k, const CoefficientFn& c) {
  const unsigned order = k.value();
  if (order <= 1) throw UnsupportedOrder("sum_power_series requires k > 1");
  Rational total = 0;
  for (unsigned j = 1; j <= order; ++j) {
    total += c(j) * Rational(falling_factorial(order, j));
  }
  return SeriesValue::finite(total);
}

SeriesValue alt_sum_power_series(Order k, const CoefficientFn& c) {
  const unsigned order = k.value();
  if (order <= 1) throw UnsupportedOrder("alt_sum_power_series requires k > 1");
  const Rational two_pow(power_of_two(order - 1));
  const Rational log_coefficient = Rational(static_cast<long>(order)) * two_pow;

  Rational constant = c(order) * Rational(factorial(order)) * two_pow;
  if (order % 2 == 0) constant = -constant;  // (-1)^(k+1)
  for (unsigned j = 1; j <= order; ++j) {
    Rational term = c(j) * Rational(falling_factorial(order, j));
    constant += (j % 2 == 0) ? term : -term;
  }
  return SeriesValue::finite({constant, log_coefficient});
}

PartialSumResult partial_sum(SeriesSpec spec, unsigned long terms) {
  const unsigned order = spec.order.value();
  if (order == 0) throw std::invalid_argument("partial_sum requires k >= 1");
  if (terms == 0) throw std::invalid_argument("partial_sum requires N >= 1");

  detail::FractionAccumulator acc;
  BigInt triangular = 1;  // T_k(1)
  const BigInt one = 1;
  const BigInt minus_one = -1;
  for (unsigned long n = 1; n <= terms; ++n) {
    const bool negative = spec.alternating && n % 2 == 0;
    acc.add(negative ? minus_one : one, triangular);
    // T_k(n+1) = T_k(n) (n+k)/n
    triangular *= n + order;
    mpz_divexact_ui(triangular.get_mpz_t(), triangular.get_mpz_t(), n);
  }

  PartialSumResult result;
  result.terms = terms;
  result.value = acc.value();
  SeriesValue closed = spec.alternating ? alt_sum_closed(spec.order) : sum_closed(spec.order);
  if (!closed.is_divergent()) result.remainder = closed.value() - LogTwoLinear(result.value);
  return result;
}

Rational remainder_formula(Order k, unsigned long terms) {
  if (k.value() < 2) throw UnsupportedOrder("remainder_formula requires k >= 2");
  if (terms == 0) throw std::invalid_argument("remainder_formula requires N >= 1");
  const BigInt next = combinatorics::triangular(Order(k.value() - 1), Index(terms + 1));
  return order_ratio(k.value()) / Rational(next);
}

std::pair<Rational, Rational> partial_fraction_split(Order k, Index n) {
  if (k.value() < 2) throw UnsupportedOrder("partial_fraction_split requires k >= 2");
  const Order lower(k.value() - 1);
  const Rational ratio = order_ratio(k.value());
  Rational first = ratio / Rational(combinatorics::triangular(lower, n));
  Rational second = ratio / Rational(combinatorics::triangular(lower, Index(n.value() + 1)));
  return {first, -second};
}

}  // namespace trisum::series
