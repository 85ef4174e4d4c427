#pragma once

// Generalized triangular numbers, binomial coefficients, harmonic numbers and
// the integration constants C_j. Each quantity has two independent routes so
// the sweeps in verify.hpp can cross-check them.

#include <compare>
#include <functional>
#include <stdexcept>

#include "trisum/exact_numbers.hpp"

namespace trisum {

/// Order k of a generalized triangular number or series family (k >= 0).
class Order {
 public:
  constexpr explicit Order(unsigned k) : k_(k) {}
  constexpr unsigned value() const { return k_; }
  friend constexpr auto operator<=>(Order, Order) = default;

 private:
  unsigned k_;
};

/// Position n >= 1 in a triangular sequence. n = 0 is rejected.
class Index {
 public:
  explicit Index(unsigned long n) : n_(n) {
    if (n == 0) throw std::invalid_argument("index must be >= 1");
  }
  unsigned long value() const { return n_; }
  friend auto operator<=>(Index, Index) = default;

 private:
  unsigned long n_;
};

/// Source of the constants C_j. Verification suites accept an alternative
/// source so a perturbed table can be injected as a negative control.
using CoefficientFn = std::function<Rational(unsigned j)>;

namespace combinatorics {

/// C(n, k) by the multiplicative formula; each partial product is itself a
/// binomial coefficient, so every division is exact. Returns 0 when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// T_k(n) = C(n+k-1, k).
BigInt triangular(Order k, Index n);

/// T_k(n) from T_0 = 1 and T_k(n) = sum_{i<=n} T_{k-1}(i), row by row.
BigInt triangular_recursive(Order k, Index n);

BigInt factorial(unsigned long n);
/// n!/(n-j)! = n (n-1) ... (n-j+1); 0 when j > n.
BigInt falling_factorial(unsigned long n, unsigned long j);
/// n (n+1) ... (n+len-1).
BigInt rising_product(const BigInt& n, unsigned long len);

/// H_l = 1 + 1/2 + ... + 1/l, H_0 = 0. Memoized.
Rational harmonic(unsigned long l);

/// C_j = (-1)^j H_{j-1}/(j-1)!. Memoized. Throws std::invalid_argument for j = 0.
Rational coefficient_c(unsigned j);

/// C_j from C_1 = 0 and C_j = -C_{j-1}/(j-1) + (-1)^j/((j-1)! (j-1)).
/// Not memoized; it is the independent route against coefficient_c.
Rational coefficient_c_recursive(unsigned j);

inline const CoefficientFn& default_coefficients() {
  static const CoefficientFn fn = [](unsigned j) { return coefficient_c(j); };
  return fn;
}

}  // namespace combinatorics
}  // namespace trisum
