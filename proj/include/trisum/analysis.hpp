#pragma once

// Numeric checks of the k-fold integrated geometric series
//
//   (-1)^k (1-x)^(k-1)/(k-1)! log(1-x) - C_k (1-x)^(k-1) + sum_{j=1..k} C_j x^(k-j)/(k-j)!
//       = sum_{n>=1} x^(n+k-1) / (n (n+1) ... (n+k-1))
//
// at rational points of [-1, 1] with rigorous tail bounds, plus Euler-transform
// acceleration of the alternating series measured against the exact closed forms.

#include <stdexcept>

#include "trisum/combinatorics.hpp"
#include "trisum/exact_numbers.hpp"
#include "trisum/series.hpp"

namespace trisum::analysis {

/// The identity has no finite value at (k = 1, x = 1).
class DivergentPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point (k, x) with k >= 1 and -1 <= x <= 1, excluding (1, 1).
class EvalPoint {
 public:
  /// Throws std::invalid_argument for k = 0 or x outside [-1, 1], and
  /// DivergentPoint for (1, 1).
  EvalPoint(Order k, Rational x);

  Order order() const { return k_; }
  const Rational& x() const { return x_; }

 private:
  Order k_;
  Rational x_;
};

struct GapReport {
  unsigned long terms = 0;
  unsigned digits = 0;
  Rational rhs_partial;
  DecimalApprox lhs_value;
  DecimalApprox gap;    // |LHS - RHS_N|
  Rational gap_upper;   // rigorous upper bound on |LHS - RHS_N|
  Rational tail_bound;  // rigorous bound on |sum - RHS_N|
  /// gap_upper <= tail_bound + 10^(-digits)
  bool within_bound = false;
};

struct AccelReport {
  series::SeriesSpec target{Order(1), true};
  Rational tolerance;
  /// Terms a plain partial sum needs before the first omitted term drops
  /// below tolerance.
  BigInt naive_terms;
  unsigned long accel_terms = 0;
  Rational accelerated_value;
  /// The transform's own bound on the remaining tail.
  Rational error_estimate;
  /// Upper bound on |exact closed value - accelerated_value|.
  Rational achieved_error;
  /// Decided by lt_compare against the exact closed value.
  bool within_tolerance = false;
};

/// Exact N-term right-hand side.
Rational master_rhs_partial(const EvalPoint& p, unsigned long terms);

/// Enclosure of log(1 - x) for rational x < 1 with width <= 10^(-digits).
RationalInterval log1m_enclosure(const Rational& x, unsigned digits);

/// Enclosure of the left-hand side with width <= 10^(-digits). At x = 1 the
/// logarithmic term takes its limit 0 and the result is exact.
RationalInterval master_lhs_enclosure(const EvalPoint& p, unsigned digits);

DecimalApprox master_lhs(const EvalPoint& p, unsigned digits);

/// Rigorous bound on sum_{n>N} |x|^(n+k-1)/(n ... (n+k-1)):
///   |x| < 1 : |x|^(N+k) / ((N+1)...(N+k)) / (1-|x|)
///   x = 1   : the exact telescoping remainder divided by k!
///   x = -1  : the first omitted term 1/((N+1)...(N+k))
Rational master_tail_bound(const EvalPoint& p, unsigned long terms);

GapReport master_gap(const EvalPoint& p, unsigned long terms, unsigned digits);

/// Smallest N with 1/T_k(N+1) <= tolerance.
BigInt naive_terms_estimate(Order k, const Rational& tolerance);

/// Euler transform of sum (-1)^(n+1)/T_k(n): sum_m (-1)^m (Delta^m a)_1 / 2^(m+1).
/// Stops once the estimate b_M / 2^(M+1) of the remaining tail drops to the
/// tolerance. Throws UnsupportedSeries for non-alternating specs and
/// std::invalid_argument for k = 0 or tolerance <= 0.
AccelReport euler_accelerate(series::SeriesSpec spec, const Rational& tolerance);

}  // namespace trisum::analysis
