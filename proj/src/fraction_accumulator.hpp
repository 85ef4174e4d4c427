#pragma once

#include "trisum/exact_numbers.hpp"

namespace trisum::detail {

// Running sum of fractions kept over the lcm of the denominators seen so far.
// One gcd per term against the accumulated denominator, one canonicalization
// at the end; much cheaper than reducing after every addition for long sums.
class FractionAccumulator {
 public:
  // Adds num/den; den must be positive but need not be coprime to num.
  void add(const BigInt& num, const BigInt& den) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), den.get_mpz_t());
    BigInt scale_mine = den / g;
    BigInt scale_theirs = den_ / g;
    num_ = num_ * scale_mine + num * scale_theirs;
    den_ *= scale_mine;
  }

  void add(const Rational& value) { add(value.numerator(), value.denominator()); }

  Rational value() const { return Rational(num_, den_); }

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace trisum::detail
