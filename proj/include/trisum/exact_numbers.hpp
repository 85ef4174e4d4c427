#pragma once

// Exact scalars: arbitrary-precision rationals, the module Q + Q*log(2), and
// decimal rendering with rigorous error bounds.
//
// All values are immutable after construction and every operation is a pure
// function, so instances may be shared freely between threads.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace trisum {

using BigInt = mpz_class;

/// Exact rational number, always in canonical form: positive denominator,
/// gcd(|num|, den) = 1, zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  /// Throws std::domain_error when denominator is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  static Rational from_mpq(const mpq_class& value);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  /// Throws std::domain_error for zero.
  Rational reciprocal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  /// Accepts "p", "p/q", plain decimals ("0.25", "-3.") and scientific
  /// notation ("1e-10", "2.5E3"). The conversion is exact. Throws
  /// std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

 private:
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);
BigInt pow10(unsigned exponent);
/// 10^(-exponent) as an exact rational.
Rational ten_to_minus(unsigned exponent);

/// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  bool contains(const Rational& value) const { return lo <= value && value <= hi; }
  bool contains(const RationalInterval& inner) const {
    return lo <= inner.lo && inner.hi <= hi;
  }
  /// Upper bound on |v| over the interval.
  Rational magnitude() const;

  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

RationalInterval operator+(const RationalInterval& lhs, const RationalInterval& rhs);
RationalInterval operator+(const RationalInterval& lhs, const Rational& rhs);
RationalInterval operator-(const RationalInterval& lhs, const Rational& rhs);
RationalInterval operator*(const Rational& scale, const RationalInterval& interval);
/// Rounds endpoints outward onto the grid 10^(-digits); keeps endpoint sizes bounded.
RationalInterval round_outward(const RationalInterval& interval, unsigned digits);

/// Enclosure [lo, hi] of log 2 with lo < log 2 < hi and hi - lo <= 10^(-digits).
/// Uses log 2 = 2*atanh(1/3) with the geometric tail bound of ratio 1/9.
/// Throws std::invalid_argument for digits == 0.
RationalInterval log2_enclosure(unsigned digits);

/// Exact value a + b*log(2) with rational a, b. Because log 2 is irrational the
/// representation is unique and equality is componentwise.
class LogTwoLinear {
 public:
  LogTwoLinear() = default;
  LogTwoLinear(Rational rational_part) : a_(std::move(rational_part)) {}  // NOLINT
  LogTwoLinear(long rational_part) : a_(rational_part) {}                 // NOLINT
  LogTwoLinear(Rational rational_part, Rational log2_coefficient)
      : a_(std::move(rational_part)), b_(std::move(log2_coefficient)) {}

  static LogTwoLinear log2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& log2_coefficient() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }

  LogTwoLinear operator-() const { return {-a_, -b_}; }
  friend LogTwoLinear operator+(const LogTwoLinear& x, const LogTwoLinear& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend LogTwoLinear operator-(const LogTwoLinear& x, const LogTwoLinear& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend LogTwoLinear operator*(const Rational& r, const LogTwoLinear& x) {
    return {r * x.a_, r * x.b_};
  }
  friend bool operator==(const LogTwoLinear&, const LogTwoLinear&) = default;

  /// Canonical exact form: "a", "b*log(2)", "a + b*log(2)" or "a - |b|*log(2)".
  std::string to_string() const;
  /// Inverse of to_string. Throws std::invalid_argument on malformed input.
  static LogTwoLinear parse(std::string_view text);

 private:
  Rational a_;
  Rational b_;
};

inline LogTwoLinear lt_add(const LogTwoLinear& x, const LogTwoLinear& y) { return x + y; }
inline LogTwoLinear lt_scale(const Rational& r, const LogTwoLinear& x) { return r * x; }

/// Sign of (x - y) as a real number. Equality is decided componentwise; a
/// strict ordering is found by refining log 2 enclosures until the interval
/// for the difference excludes zero. Never uses floating point.
std::strong_ordering lt_compare(const LogTwoLinear& x, const LogTwoLinear& y);

/// Interval of width <= 10^(-digits) containing the real value of x.
RationalInterval enclose(const LogTwoLinear& x, unsigned digits);

struct DecimalApprox {
  unsigned digits = 0;
  std::string value;
  Rational error_bound;  // |true - rendered| <= error_bound <= 10^(-digits)
};

/// Fixed-point rendering with `digits` fractional digits, round-half-to-even.
std::string format_fixed(const Rational& value, unsigned digits);
/// Scientific rendering of |value| rounded up, e.g. "6.2e-12"; "0" for zero.
std::string format_scientific_upper(const Rational& value, unsigned significant = 3);

inline constexpr unsigned kGuardDigits = 10;

DecimalApprox to_decimal(const Rational& value, unsigned digits);
/// Requires interval.width() <= 10^(-digits); renders the midpoint.
DecimalApprox to_decimal(const RationalInterval& interval, unsigned digits);
DecimalApprox lt_to_decimal(const LogTwoLinear& x, unsigned digits);

}  // namespace trisum
