#include "trisum/combinatorics.hpp"

#include <algorithm>
#include <vector>

#include "prefix_cache.hpp"

namespace trisum::combinatorics {

namespace {

detail::PrefixCache<BigInt>& factorial_table() {
  static detail::PrefixCache<BigInt> table(BigInt(1), [](std::size_t i, const BigInt& prev) {
    return BigInt(prev * static_cast<unsigned long>(i));
  });
  return table;
}

detail::PrefixCache<Rational>& harmonic_table() {
  static detail::PrefixCache<Rational> table(Rational(0), [](std::size_t i, const Rational& prev) {
    return prev + Rational(BigInt(1), BigInt(static_cast<unsigned long>(i)));
  });
  return table;
}

// Entry i holds C_{i+1}.
detail::PrefixCache<Rational>& coefficient_table() {
  static detail::PrefixCache<Rational> table(Rational(0), [](std::size_t i, const Rational&) {
    const unsigned long j = i + 1;
    Rational value = harmonic(j - 1) / Rational(factorial(j - 1));
    return (j % 2 == 0) ? value : -value;
  });
  return table;
}

}  // namespace

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // After step i, result == C(n-k+i, i).
  for (unsigned long i = 1; i <= k; ++i) {
    result *= n - k + i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
  }
  return result;
}

BigInt triangular(Order k, Index n) {
  return binomial(n.value() + k.value() - 1, k.value());
}

BigInt triangular_recursive(Order k, Index n) {
  std::vector<BigInt> row(n.value(), BigInt(1));
  for (unsigned level = 1; level <= k.value(); ++level) {
    for (std::size_t i = 1; i < row.size(); ++i) row[i] += row[i - 1];
  }
  return row.back();
}

BigInt factorial(unsigned long n) {
  return factorial_table().get(n);
}

BigInt falling_factorial(unsigned long n, unsigned long j) {
  if (j > n) return 0;
  BigInt out = 1;
  for (unsigned long i = 0; i < j; ++i) out *= n - i;
  return out;
}

BigInt rising_product(const BigInt& n, unsigned long len) {
  BigInt out = 1;
  for (unsigned long i = 0; i < len; ++i) out *= n + i;
  return out;
}

Rational harmonic(unsigned long l) {
  return harmonic_table().get(l);
}

Rational coefficient_c(unsigned j) {
  if (j == 0) throw std::invalid_argument("coefficient_c: j must be >= 1");
  return coefficient_table().get(j - 1);
}

Rational coefficient_c_recursive(unsigned j) {
  if (j == 0) throw std::invalid_argument("coefficient_c_recursive: j must be >= 1");
  Rational c = 0;  // C_1
  BigInt fact = 1;  // (i-1)!
  for (unsigned i = 2; i <= j; ++i) {
    fact *= i - 1;
    Rational correction(BigInt(1), BigInt(fact * (i - 1)));
    c = -c / Rational(static_cast<long>(i - 1)) + (i % 2 == 0 ? correction : -correction);
  }
  return c;
}

}  // namespace trisum::combinatorics
