#include "trisum/analysis.hpp"

#include <vector>

#include "fraction_accumulator.hpp"

namespace trisum::analysis {

namespace {

using combinatorics::factorial;
using combinatorics::rising_product;

unsigned decimal_size(const BigInt& value) {
  return static_cast<unsigned>(mpz_sizeinbase(value.get_mpz_t(), 10));
}

Rational two_pow(long exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

// -sum x^n/n, valid for |x| <= 1/2.
RationalInterval log1m_taylor(const Rational& x, unsigned digits) {
  const Rational abs_x = x.abs();
  const Rational target = ten_to_minus(digits) / Rational(2);
  const Rational inv_gap = (Rational(1) - abs_x).reciprocal();
  detail::FractionAccumulator acc;
  Rational power = x;
  for (unsigned long n = 1;; ++n) {
    acc.add(-power / Rational(static_cast<long>(n)));
    power *= x;
    Rational tail = power.abs() / Rational(static_cast<long>(n + 1)) * inv_gap;
    if (tail <= target) {
      Rational sum = acc.value();
      return round_outward({sum - tail, sum + tail}, digits + 2);
    }
  }
}

// 2 atanh(t) = log((1+t)/(1-t)), for |t| <= 1/5.
RationalInterval log_via_atanh(const Rational& t, unsigned digits) {
  const Rational t2 = t * t;
  const Rational target = ten_to_minus(digits) / Rational(4);
  const Rational inv_gap = (Rational(1) - t2).reciprocal();
  detail::FractionAccumulator acc;
  Rational power = t;  // t^(2i+1)
  for (unsigned long i = 0;; ++i) {
    acc.add(Rational(2) * power / Rational(static_cast<long>(2 * i + 1)));
    power *= t2;
    Rational tail = Rational(2) * power.abs() / Rational(static_cast<long>(2 * i + 3)) * inv_gap;
    if (tail <= target) {
      Rational sum = acc.value();
      return {sum - tail, sum + tail};
    }
  }
}

}  // namespace

EvalPoint::EvalPoint(Order k, Rational x) : k_(k), x_(std::move(x)) {
  if (k.value() == 0) throw std::invalid_argument("evaluation point requires k >= 1");
  if (x_ < Rational(-1) || x_ > Rational(1)) {
    throw std::invalid_argument("evaluation point requires -1 <= x <= 1");
  }
  if (k.value() == 1 && x_ == Rational(1)) {
    throw DivergentPoint("k = 1 diverges at x = 1");
  }
}

Rational master_rhs_partial(const EvalPoint& p, unsigned long terms) {
  if (terms == 0) throw std::invalid_argument("master_rhs_partial requires N >= 1");
  if (p.x().is_zero()) return 0;
  const unsigned k = p.order().value();
  const BigInt x_num = p.x().numerator();
  const BigInt x_den = p.x().denominator();

  BigInt power_num;
  BigInt power_den;
  mpz_pow_ui(power_num.get_mpz_t(), x_num.get_mpz_t(), k);  // x^(n+k-1) at n = 1
  mpz_pow_ui(power_den.get_mpz_t(), x_den.get_mpz_t(), k);
  BigInt product = factorial(k);  // 1 * 2 * ... * k

  detail::FractionAccumulator acc;
  for (unsigned long n = 1; n <= terms; ++n) {
    acc.add(power_num, BigInt(power_den * product));
    power_num *= x_num;
    power_den *= x_den;
    // n (n+1)...(n+k-1) -> (n+1)...(n+k)
    product *= n + k;
    mpz_divexact_ui(product.get_mpz_t(), product.get_mpz_t(), n);
  }
  return acc.value();
}

RationalInterval log1m_enclosure(const Rational& x, unsigned digits) {
  if (x >= Rational(1)) throw std::invalid_argument("log(1 - x) requires x < 1");
  if (x.is_zero()) return {0, 0};
  if (x.abs() <= Rational(BigInt(1), BigInt(2))) return log1m_taylor(x, digits);

  // Reduce y = 1 - x into [3/4, 3/2) by a power of two, then
  // log y = 2 atanh((y'-1)/(y'+1)) - m log 2 with |t| <= 1/5.
  Rational y = Rational(1) - x;
  long m = 0;
  while (y * two_pow(m) < Rational(BigInt(3), BigInt(4))) ++m;
  while (y * two_pow(m) >= Rational(BigInt(3), BigInt(2))) --m;
  const Rational reduced = y * two_pow(m);
  const Rational t = (reduced - Rational(1)) / (reduced + Rational(1));

  RationalInterval result = log_via_atanh(t, digits);
  if (m != 0) {
    const BigInt shift(m < 0 ? -m : m);
    RationalInterval log2 = log2_enclosure(digits + 1 + decimal_size(shift));
    result = result + Rational(-m) * log2;
  }
  return round_outward(result, digits + 2);
}

RationalInterval master_lhs_enclosure(const EvalPoint& p, unsigned digits) {
  const unsigned k = p.order().value();
  const Rational& x = p.x();
  const Rational one_minus_x = Rational(1) - x;
  const Rational y_pow = pow(one_minus_x, k - 1);

  Rational rational_part = -combinatorics::coefficient_c(k) * y_pow;
  for (unsigned j = 1; j <= k; ++j) {
    rational_part += combinatorics::coefficient_c(j) * pow(x, k - j) / Rational(factorial(k - j));
  }
  // At x = 1 (k >= 2) the factor (1-x)^(k-1) log(1-x) tends to 0; at x = 0 the log is 0.
  if (x == Rational(1) || x.is_zero()) return {rational_part, rational_part};

  Rational coefficient = y_pow / Rational(factorial(k - 1));
  if (k % 2 == 1) coefficient = -coefficient;
  const unsigned extra = decimal_size(coefficient.abs().numerator()) + 1;
  return coefficient * log1m_enclosure(x, digits + extra) + rational_part;
}

DecimalApprox master_lhs(const EvalPoint& p, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("master_lhs requires digits >= 1");
  return to_decimal(master_lhs_enclosure(p, digits + kGuardDigits), digits);
}

Rational master_tail_bound(const EvalPoint& p, unsigned long terms) {
  const unsigned k = p.order().value();
  const Rational& x = p.x();
  if (x.is_zero()) return 0;
  const Rational first_omitted_denominator(rising_product(BigInt(terms + 1), k));
  if (x == Rational(1)) {
    return series::remainder_formula(p.order(), terms) / Rational(factorial(k));
  }
  if (x == Rational(-1)) return first_omitted_denominator.reciprocal();
  const Rational abs_x = x.abs();
  return pow(abs_x, static_cast<unsigned>(terms + k)) / first_omitted_denominator /
         (Rational(1) - abs_x);
}

GapReport master_gap(const EvalPoint& p, unsigned long terms, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("master_gap requires digits >= 1");
  GapReport report;
  report.terms = terms;
  report.digits = digits;
  report.rhs_partial = master_rhs_partial(p, terms);
  report.tail_bound = master_tail_bound(p, terms);

  const RationalInterval lhs = master_lhs_enclosure(p, digits + kGuardDigits);
  report.lhs_value = to_decimal(lhs, digits);

  const RationalInterval diff = lhs - report.rhs_partial;
  report.gap_upper = diff.magnitude();
  RationalInterval abs_diff{0, report.gap_upper};
  if (diff.lo.sign() > 0) abs_diff.lo = diff.lo;
  if (diff.hi.sign() < 0) abs_diff.lo = -diff.hi;
  report.gap = to_decimal(abs_diff, digits);
  report.within_bound = report.gap_upper <= report.tail_bound + ten_to_minus(digits);
  return report;
}

BigInt naive_terms_estimate(Order k, const Rational& tolerance) {
  if (k.value() == 0) throw std::invalid_argument("naive_terms_estimate requires k >= 1");
  if (tolerance.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
  const Rational k_fact(factorial(k.value()));
  // 1/T_k(n) <= tol  <=>  T_k(n) tol >= 1, monotone in n.
  auto small_enough = [&](const BigInt& n) {
    return Rational(rising_product(n, k.value())) / k_fact * tolerance >= Rational(1);
  };
  BigInt hi = 1;
  while (!small_enough(hi)) hi *= 2;
  BigInt lo = hi / 2;  // fails unless hi == 1
  if (hi == 1) return 0;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (small_enough(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi - 1;
}

AccelReport euler_accelerate(series::SeriesSpec spec, const Rational& tolerance) {
  if (!spec.alternating) throw UnsupportedSeries("Euler acceleration needs an alternating series");
  const unsigned k = spec.order.value();
  if (k == 0) throw std::invalid_argument("euler_accelerate requires k >= 1");
  if (tolerance.sign() <= 0) throw std::invalid_argument("tolerance must be positive");

  // a_n = 1/T_k(n) = k int_0^1 (1-t)^(k-1) t^(n-1) dt is completely monotone,
  // so b_m = (-1)^m (Delta^m a)_1 is positive and non-increasing. The tail past
  // M is therefore at most b_{M+1} sum_{m>M} 2^-(m+1) <= b_M / 2^(M+1).
  constexpr unsigned long kMaxTerms = 100000;
  AccelReport report;
  report.target = spec;
  report.tolerance = tolerance;

  std::vector<Rational> diagonal;  // diagonal[i] = Delta^i a_{m+1-i}
  detail::FractionAccumulator acc;
  BigInt triangular = 1;
  Rational weight(BigInt(1), BigInt(2));  // 2^-(m+1)
  for (unsigned long m = 0; m < kMaxTerms; ++m) {
    const Rational a_next(BigInt(1), triangular);  // a_{m+1}
    triangular *= m + 1 + k;
    mpz_divexact_ui(triangular.get_mpz_t(), triangular.get_mpz_t(), m + 1);

    std::vector<Rational> next;
    next.reserve(diagonal.size() + 1);
    next.push_back(a_next);
    for (std::size_t i = 1; i <= diagonal.size(); ++i) {
      next.push_back(next[i - 1] - diagonal[i - 1]);
    }
    diagonal = std::move(next);

    Rational b = diagonal.back();
    if (m % 2 == 1) b = -b;
    acc.add(b * weight);
    const Rational estimate = b * weight;
    weight /= Rational(2);
    if (estimate <= tolerance) {
      report.accel_terms = m + 1;
      report.error_estimate = estimate;
      break;
    }
  }
  if (report.accel_terms == 0) throw std::runtime_error("Euler transform did not converge");

  report.accelerated_value = acc.value();
  report.naive_terms = naive_terms_estimate(spec.order, tolerance);

  const LogTwoLinear exact = series::alt_sum_closed(spec.order).value();
  const LogTwoLinear value(report.accelerated_value);
  const unsigned digits = decimal_size(tolerance.denominator()) + 5;
  report.achieved_error = enclose(exact - value, digits).magnitude();
  report.within_tolerance = lt_compare(exact, value + LogTwoLinear(tolerance)) <= 0 &&
                            lt_compare(exact, value - LogTwoLinear(tolerance)) >= 0;
  return report;
}

}  // namespace trisum::analysis
