#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "trisum/exact_numbers.hpp"

using namespace trisum;

namespace {

Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

const LogTwoLinear L = LogTwoLinear::log2();

bool canonical(const Rational& r) {
  BigInt g;
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r.is_zero()) return den == 1;
  return den > 0 && g == 1;
}

bool canonical(const LogTwoLinear& x) {
  return canonical(x.rational_part()) && canonical(x.log2_coefficient());
}

}  // namespace

TEST_CASE("Rational keeps canonical form") {
  CHECK(Rational(BigInt(6), BigInt(-4)) == q(-3, 2));
  CHECK(Rational(BigInt(6), BigInt(-4)).denominator() == 2);
  CHECK(Rational(BigInt(0), BigInt(-7)).denominator() == 1);
  CHECK(q(1, 3) + q(1, 6) == q(1, 2));
  CHECK(q(2, 3) * q(3, 2) == Rational(1));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(q(1) / Rational(0), std::domain_error);

  oracle::RationalGen gen(7);
  for (int i = 0; i < 300; ++i) {
    Rational a = gen.next();
    Rational b = gen.next();
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    if (!b.is_zero()) CHECK(canonical(a / b));
  }
}

TEST_CASE("Rational parsing") {
  CHECK(Rational::parse("7") == q(7));
  CHECK(Rational::parse("-3/6") == q(-1, 2));
  CHECK(Rational::parse("0.25") == q(1, 4));
  CHECK(Rational::parse("1e-10") == ten_to_minus(10));
  CHECK(Rational::parse("2.5E3") == q(2500));
  CHECK(Rational::parse("+.5") == q(1, 2));
  CHECK(Rational::parse("-1") == q(-1));
  for (const char* bad : {"", "-", "1/0", "1/-2", "abc", "1.2.3", "1e", "e5", ".", "1/2/3", "0x10"}) {
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("lt_add") {
  CHECK(lt_add(L, L) == LogTwoLinear(q(0), q(2)));
  CHECK(lt_add({q(-2), q(4)}, {q(2), q(-4)}) == LogTwoLinear(q(0), q(0)));
  CHECK(lt_add({q(1), q(2)}, LogTwoLinear(q(1, 2))) == LogTwoLinear(q(3, 2), q(2)));
}

TEST_CASE("lt_scale") {
  // Doubling 2 log 2 - 1 gives 4 log 2 - 2.
  CHECK(lt_scale(q(2), {q(-1), q(2)}) == LogTwoLinear(q(-2), q(4)));
  CHECK(lt_scale(q(0), {q(7), q(3)}) == LogTwoLinear(q(0), q(0)));
  CHECK(lt_scale(q(3, 2), {q(-5), q(8)}) == LogTwoLinear(q(-15, 2), q(12)));
}

TEST_CASE("LogTwoLinear arithmetic is exact and embeds Q") {
  oracle::RationalGen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = gen.next();
    const Rational s = gen.next();
    const LogTwoLinear x{gen.next(), gen.next()};
    const LogTwoLinear y{gen.next(), gen.next()};
    CHECK(lt_scale(r, LogTwoLinear(s)) == LogTwoLinear(r * s));
    CHECK(canonical(lt_add(x, y)));
    CHECK(canonical(lt_scale(r, x)));
    CHECK(lt_add(x, y) - y == x);
    CHECK(lt_scale(r, lt_add(x, y)) == lt_add(lt_scale(r, x), lt_scale(r, y)));
  }
}

TEST_CASE("lt_compare") {
  CHECK(lt_compare(L, L) == std::strong_ordering::equal);
  CHECK(lt_compare({q(-2), q(4)}, LogTwoLinear(0)) == std::strong_ordering::greater);
  CHECK(lt_compare(L, LogTwoLinear(q(7, 10))) == std::strong_ordering::less);
  CHECK(lt_compare(LogTwoLinear(q(7, 10)), L) == std::strong_ordering::greater);
  CHECK(lt_compare(LogTwoLinear(q(1, 3)), LogTwoLinear(q(1, 2))) == std::strong_ordering::less);

  // Differences far below double precision are still resolved.
  const Rational ref = oracle::log2_reference();
  const Rational just_below = Rational::from_mpq(ref.raw()) - ten_to_minus(80);
  CHECK(lt_compare(L, LogTwoLinear(just_below)) == std::strong_ordering::greater);
  CHECK(lt_compare(L, LogTwoLinear(just_below + ten_to_minus(79))) == std::strong_ordering::less);
}

TEST_CASE("lt_compare agrees with a high-precision reference") {
  const Rational ref = oracle::log2_reference();
  oracle::RationalGen gen(3);
  for (int i = 0; i < 200; ++i) {
    const LogTwoLinear x{gen.next(), gen.next()};
    const LogTwoLinear y{gen.next(), gen.next()};
    const Rational xv = x.rational_part() + x.log2_coefficient() * ref;
    const Rational yv = y.rational_part() + y.log2_coefficient() * ref;
    if (x == y) {
      CHECK(lt_compare(x, y) == std::strong_ordering::equal);
    } else {
      CHECK(lt_compare(x, y) == (xv <=> yv));
    }
  }
}

TEST_CASE("log2_enclosure") {
  const Rational ref = oracle::log2_reference();
  const Rational float_value = Rational::parse("0.6931471805599453");
  for (unsigned d = 1; d <= 80; ++d) {
    const auto enc = log2_enclosure(d);
    CHECK(enc.lo < ref);
    CHECK(ref < enc.hi);
    CHECK(enc.width() <= ten_to_minus(d));
    if (d <= 15) {
      CHECK(enc.lo < float_value);
      CHECK(float_value < enc.hi);
    }
    CHECK(enc.contains(log2_enclosure(d + 5)));
  }
  CHECK_THROWS_AS(log2_enclosure(0), std::invalid_argument);
}

TEST_CASE("format_fixed rounds half to even") {
  CHECK(format_fixed(q(1, 8), 2) == "0.12");
  CHECK(format_fixed(q(3, 8), 2) == "0.38");
  CHECK(format_fixed(q(-1, 8), 2) == "-0.12");
  CHECK(format_fixed(q(5, 2), 0) == "2");
  CHECK(format_fixed(q(7, 2), 0) == "4");
  CHECK(format_fixed(q(-1, 10000), 2) == "0.00");
  CHECK(format_fixed(q(1), 5) == "1.00000");
  CHECK(format_fixed(q(-123, 10), 3) == "-12.300");
  CHECK(format_fixed(q(999, 1000), 2) == "1.00");
}

TEST_CASE("format_scientific_upper") {
  CHECK(format_scientific_upper(q(0)) == "0");
  CHECK(format_scientific_upper(q(1)) == "1.00e0");
  CHECK(format_scientific_upper(q(-1, 1000)) == "1.00e-3");
  CHECK(format_scientific_upper(q(2, 3)) == "6.67e-1");
  CHECK(format_scientific_upper(q(9999, 1000)) == "1.00e1");
  CHECK(format_scientific_upper(q(12345), 2) == "1.3e4");
  CHECK(format_scientific_upper(q(5), 1) == "5e0");
}

TEST_CASE("lt_to_decimal") {
  const Rational ref = oracle::log2_reference();

  const auto log2_10 = lt_to_decimal(L, 10);
  CHECK(log2_10.value == "0.6931471806");
  CHECK((Rational::parse(log2_10.value) - ref).abs() <= ten_to_minus(10));
  CHECK(log2_10.error_bound <= ten_to_minus(10));

  CHECK(lt_to_decimal(LogTwoLinear(1), 5).value == "1.00000");
  CHECK(lt_to_decimal(LogTwoLinear(1), 5).error_bound == Rational(0));

  const LogTwoLinear alt2{q(-2), q(4)};
  const auto alt2_10 = lt_to_decimal(alt2, 10);
  CHECK(alt2_10.value == "0.7725887222");
  CHECK((Rational::parse(alt2_10.value) - (q(-2) + q(4) * ref)).abs() <= alt2_10.error_bound);

  CHECK_THROWS_AS(lt_to_decimal(L, 0), std::invalid_argument);
}

TEST_CASE("lt_to_decimal is stable under extra digits and honours its bound") {
  const Rational ref = oracle::log2_reference();
  oracle::RationalGen gen(19);
  for (int i = 0; i < 60; ++i) {
    const LogTwoLinear x{gen.next(), gen.next()};
    const Rational truth = x.rational_part() + x.log2_coefficient() * ref;
    for (unsigned d : {1u, 4u, 12u, 25u}) {
      const auto coarse = lt_to_decimal(x, d);
      const auto fine = lt_to_decimal(x, d + 5);
      CHECK(coarse.error_bound <= ten_to_minus(d));
      CHECK((Rational::parse(coarse.value) - truth).abs() <= coarse.error_bound + oracle::reference_slack());
      // Same leading d digits up to one unit of rounding slack.
      CHECK((Rational::parse(coarse.value) - Rational::parse(fine.value)).abs() <= ten_to_minus(d));
    }
  }
}

TEST_CASE("exact form strings round-trip") {
  CHECK(LogTwoLinear(q(-2), q(4)).to_string() == "-2 + 4*log(2)");
  CHECK(LogTwoLinear(q(-15, 2), q(12)).to_string() == "-15/2 + 12*log(2)");
  CHECK(LogTwoLinear(q(1, 2), q(-3)).to_string() == "1/2 - 3*log(2)");
  CHECK(L.to_string() == "1*log(2)");
  CHECK(LogTwoLinear(q(0), q(-1, 3)).to_string() == "-1/3*log(2)");
  CHECK(LogTwoLinear(2).to_string() == "2");

  oracle::RationalGen gen(5);
  for (int i = 0; i < 300; ++i) {
    const LogTwoLinear x{gen.next(), gen.next()};
    CHECK(LogTwoLinear::parse(x.to_string()) == x);
    CHECK(Rational::parse(x.rational_part().to_string()) == x.rational_part());
  }
  for (const char* bad : {"", "log(2)", "1 +", "1 + -2*log(2)", "1 * 2", "1 + 2", "1  + 2*log(2)"}) {
    CHECK_THROWS_AS(LogTwoLinear::parse(bad), std::invalid_argument);
  }
}
