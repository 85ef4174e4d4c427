#pragma once

// Sum and alternating sum of 1/T_k(n), n >= 1, by every available route:
// telescoping closed forms, the telescoping recursion, the power-series
// corollaries built on the constants C_j, and exact partial sums.

#include <optional>
#include <stdexcept>
#include <utility>

#include "trisum/combinatorics.hpp"
#include "trisum/exact_numbers.hpp"

namespace trisum::series {

/// Raised when a route is asked for an order outside its domain.
class UnsupportedOrder : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SeriesSpec {
  Order order;
  bool alternating = false;
};

/// Divergent, or a finite value in Q + Q*log(2).
class SeriesValue {
 public:
  static SeriesValue divergent() { return SeriesValue(); }
  static SeriesValue finite(LogTwoLinear value) { return SeriesValue(std::move(value)); }

  bool is_divergent() const { return !value_.has_value(); }
  /// Throws std::logic_error when divergent.
  const LogTwoLinear& value() const;
  /// "divergent" or the canonical exact form.
  std::string to_string() const;

  friend bool operator==(const SeriesValue&, const SeriesValue&) = default;

 private:
  SeriesValue() = default;
  explicit SeriesValue(LogTwoLinear value) : value_(std::move(value)) {}
  std::optional<LogTwoLinear> value_;
};

struct PartialSumResult {
  unsigned long terms = 0;
  Rational value;
  /// Closed value minus partial sum; absent when the series diverges.
  std::optional<LogTwoLinear> remainder;
};

/// Divergent for k <= 1, k/(k-1) otherwise.
SeriesValue sum_closed(Order k);

/// Divergent for k = 0, else k 2^(k-1) log 2 - k sum_{i<k} 2^(k-1-i)/i.
SeriesValue alt_sum_closed(Order k);

/// S_1 = log 2, S_k = k/(k-1) (2 S_{k-1} - 1). Divergent for k = 0.
SeriesValue alt_sum_recursive(Order k);

/// sum_{j=1..k} C_j k!/(k-j)!. Throws UnsupportedOrder for k <= 1.
SeriesValue sum_power_series(Order k,
                             const CoefficientFn& c = combinatorics::default_coefficients());

/// k 2^(k-1) log 2 + (-1)^(k+1) k! C_k 2^(k-1) + sum_{j=1..k} C_j (-1)^j k!/(k-j)!.
/// Throws UnsupportedOrder for k <= 1.
SeriesValue alt_sum_power_series(Order k,
                                 const CoefficientFn& c = combinatorics::default_coefficients());

/// Exact sum_{n=1..N} (+-1)^(n+1)/T_k(n). Requires k >= 1 and N >= 1
/// (std::invalid_argument otherwise).
PartialSumResult partial_sum(SeriesSpec spec, unsigned long terms);

/// (k/(k-1)) / T_{k-1}(N+1), the exact tail of the non-alternating series
/// after N terms. Requires k >= 2 (UnsupportedOrder) and N >= 1.
Rational remainder_formula(Order k, unsigned long terms);

/// The two signed pieces (k/(k-1))/T_{k-1}(n) and -(k/(k-1))/T_{k-1}(n+1)
/// whose sum is 1/T_k(n). Throws UnsupportedOrder for k < 2.
std::pair<Rational, Rational> partial_fraction_split(Order k, Index n);

}  // namespace trisum::series
