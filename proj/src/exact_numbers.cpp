#include "trisum/exact_numbers.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace trisum {

namespace {

BigInt floor_of(const mpq_class& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const mpq_class& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

// Nearest integer to q, ties to even.
BigInt round_half_even(const mpq_class& q) {
  BigInt whole = floor_of(q);
  mpq_class rest = q - mpq_class(whole);
  int c = cmp(rest, mpq_class(1, 2));
  if (c > 0 || (c == 0 && mpz_odd_p(whole.get_mpz_t()))) {
    whole += 1;
  }
  return whole;
}

size_t decimal_size(const BigInt& value) {
  return mpz_sizeinbase(value.get_mpz_t(), 10);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& value) {
  Rational out;
  out.value_ = value;
  out.value_.canonicalize();
  return out;
}

Rational Rational::abs() const {
  Rational out;
  out.value_ = ::abs(value_);
  return out;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  Rational out;
  mpq_inv(out.value_.get_mpq_t(), value_.get_mpq_t());
  return out;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  return value_.get_str(10);
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational: '" + original + "'");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return fail();

  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    BigInt d = parse_digits(den);
    if (d == 0) return fail();
    result = Rational(parse_digits(num), d);
  } else {
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      auto exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) return fail();
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
    }
    std::string_view whole = mantissa;
    std::string_view frac;
    if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      whole = mantissa.substr(0, dot);
      frac = mantissa.substr(dot + 1);
      if (whole.empty() && frac.empty()) return fail();
      if (!whole.empty() && !all_digits(whole)) return fail();
      if (!frac.empty() && !all_digits(frac)) return fail();
    } else if (!all_digits(whole)) {
      return fail();
    }
    std::string digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
    BigInt value = parse_digits(digits);
    if (exponent >= 0) {
      result = Rational(BigInt(value * pow10(static_cast<unsigned>(exponent))));
    } else {
      result = Rational(value, pow10(static_cast<unsigned>(-exponent)));
    }
  }
  return negative ? -result : result;
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

BigInt pow10(unsigned exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

Rational ten_to_minus(unsigned exponent) {
  return Rational(BigInt(1), pow10(exponent));
}

Rational RationalInterval::magnitude() const {
  Rational a = lo.abs();
  Rational b = hi.abs();
  return a < b ? b : a;
}

RationalInterval operator+(const RationalInterval& lhs, const RationalInterval& rhs) {
  return {lhs.lo + rhs.lo, lhs.hi + rhs.hi};
}

RationalInterval operator+(const RationalInterval& lhs, const Rational& rhs) {
  return {lhs.lo + rhs, lhs.hi + rhs};
}

RationalInterval operator-(const RationalInterval& lhs, const Rational& rhs) {
  return {lhs.lo - rhs, lhs.hi - rhs};
}

RationalInterval operator*(const Rational& scale, const RationalInterval& interval) {
  if (scale.sign() >= 0) return {scale * interval.lo, scale * interval.hi};
  return {scale * interval.hi, scale * interval.lo};
}

RationalInterval round_outward(const RationalInterval& interval, unsigned digits) {
  const BigInt scale = pow10(digits);
  const mpq_class scale_q(scale);
  return {Rational(floor_of(interval.lo.raw() * scale_q), scale),
          Rational(ceil_of(interval.hi.raw() * scale_q), scale)};
}

RationalInterval log2_enclosure(unsigned digits) {
  if (digits == 0) throw std::invalid_argument("log2_enclosure: digits must be >= 1");

  // log 2 = 2 * sum_{m>=0} t^(2m+1)/(2m+1) with t = 1/3. Past term M the tail is
  // at most 2 * t^(2M+3)/(2M+3) * 1/(1 - 1/9).
  const mpq_class ninth(1, 9);
  const mpq_class target = mpq_class(ten_to_minus(digits).raw()) / 2;
  mpq_class power(1, 3);  // t^(2m+1)
  mpq_class partial = 0;
  for (unsigned m = 0;; ++m) {
    partial += 2 * power / (2 * m + 1);
    power *= ninth;
    mpq_class tail = 2 * power / (2 * m + 3) * mpq_class(9, 8);
    if (tail <= target) {
      RationalInterval exact{Rational::from_mpq(partial), Rational::from_mpq(partial + tail)};
      return round_outward(exact, digits + 2);
    }
  }
}

std::string LogTwoLinear::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  if (a_.is_zero()) return b_.to_string() + "*log(2)";
  std::string out = a_.to_string();
  out += b_.sign() > 0 ? " + " : " - ";
  out += b_.abs().to_string();
  out += "*log(2)";
  return out;
}

LogTwoLinear LogTwoLinear::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> LogTwoLinear {
    throw std::invalid_argument("malformed exact form: '" + original + "'");
  };
  constexpr std::string_view kLogSuffix = "*log(2)";

  auto parse_log_term = [&](std::string_view term) {
    if (term.size() <= kLogSuffix.size() || !term.ends_with(kLogSuffix)) fail();
    return Rational::parse(term.substr(0, term.size() - kLogSuffix.size()));
  };

  std::vector<std::string_view> tokens;
  size_t start = 0;
  while (start <= text.size()) {
    size_t space = text.find(' ', start);
    if (space == std::string_view::npos) space = text.size();
    tokens.push_back(text.substr(start, space - start));
    start = space + 1;
  }

  if (tokens.size() == 1) {
    if (tokens[0].ends_with(kLogSuffix)) return {Rational(0), parse_log_term(tokens[0])};
    return {Rational::parse(tokens[0]), Rational(0)};
  }
  if (tokens.size() != 3 || (tokens[1] != "+" && tokens[1] != "-")) return fail();
  if (tokens[2].starts_with("-") || tokens[2].starts_with("+")) return fail();
  Rational a = Rational::parse(tokens[0]);
  Rational b = parse_log_term(tokens[2]);
  return {a, tokens[1] == "+" ? b : -b};
}

RationalInterval enclose(const LogTwoLinear& x, unsigned digits) {
  if (x.is_rational()) return {x.rational_part(), x.rational_part()};
  const Rational& b = x.log2_coefficient();
  // |b| < 10^size, so a log 2 enclosure of width 10^-(digits+size) suffices.
  unsigned extra = static_cast<unsigned>(decimal_size(b.abs().numerator()));
  RationalInterval log2 = log2_enclosure(digits + extra);
  return b * log2 + x.rational_part();
}

std::strong_ordering lt_compare(const LogTwoLinear& x, const LogTwoLinear& y) {
  if (x == y) return std::strong_ordering::equal;
  LogTwoLinear diff = x - y;
  if (diff.is_rational()) return diff.rational_part() <=> Rational(0);
  for (unsigned digits = 16;; digits *= 2) {
    RationalInterval range = enclose(diff, digits);
    if (range.lo.sign() > 0) return std::strong_ordering::greater;
    if (range.hi.sign() < 0) return std::strong_ordering::less;
  }
}

std::string format_fixed(const Rational& value, unsigned digits) {
  BigInt scaled = round_half_even(value.raw() * mpq_class(pow10(digits)));
  bool negative = scaled < 0;
  std::string body = BigInt(::abs(scaled)).get_str(10);
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return negative ? "-" + body : body;
}

std::string format_scientific_upper(const Rational& value, unsigned significant) {
  if (significant == 0) significant = 1;
  const mpq_class v = ::abs(value.raw());
  if (v == 0) return "0";

  auto power_of_ten = [](long e) {
    return e >= 0 ? mpq_class(pow10(static_cast<unsigned>(e)))
                  : mpq_class(ten_to_minus(static_cast<unsigned>(-e)).raw());
  };
  long exponent = static_cast<long>(decimal_size(v.get_num())) -
                  static_cast<long>(decimal_size(v.get_den()));
  while (v >= power_of_ten(exponent + 1)) ++exponent;
  while (v < power_of_ten(exponent)) --exponent;

  long shift = static_cast<long>(significant) - 1 - exponent;
  BigInt mantissa = ceil_of(v * power_of_ten(shift));
  if (mantissa == pow10(significant)) {
    mantissa = pow10(significant - 1);
    ++exponent;
  }
  std::string digits = mantissa.get_str(10);
  std::string out = digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(exponent);
  return out;
}

DecimalApprox to_decimal(const Rational& value, unsigned digits) {
  return to_decimal(RationalInterval{value, value}, digits);
}

DecimalApprox to_decimal(const RationalInterval& interval, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("to_decimal: digits must be >= 1");
  if (interval.width() > ten_to_minus(digits)) {
    throw std::logic_error("to_decimal: enclosure wider than requested precision");
  }
  const Rational mid = interval.midpoint();
  const BigInt scale = pow10(digits);
  Rational rendered(round_half_even(mid.raw() * mpq_class(scale)), scale);
  DecimalApprox out;
  out.digits = digits;
  out.value = format_fixed(mid, digits);
  out.error_bound = (mid - rendered).abs() + interval.width() / Rational(2);
  return out;
}

DecimalApprox lt_to_decimal(const LogTwoLinear& x, unsigned digits) {
  if (digits == 0) throw std::invalid_argument("lt_to_decimal: digits must be >= 1");
  return to_decimal(enclose(x, digits + kGuardDigits), digits);
}

}  // namespace trisum
