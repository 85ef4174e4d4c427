#pragma once

// Exhaustive exact sweeps of the identities over rectangular parameter grids.
// Each suite stops at the first failing instance in lexicographic parameter
// order and records it as the counterexample.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisum/combinatorics.hpp"

namespace trisum::verify {

struct Counterexample {
  std::map<std::string, long> parameters;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string suite;
  /// Inclusive bounds per swept parameter, in sweep order.
  std::vector<std::pair<std::string, std::pair<long, long>>> ranges;
  unsigned long checked = 0;
  bool passed = false;
  std::optional<Counterexample> counterexample;
};

/// 1/T_k(n) = (k/(k-1)) (1/T_{k-1}(n) - 1/T_{k-1}(n+1)) for 2<=k<=k_max, 1<=n<=n_max.
IdentityReport verify_partial_fraction(unsigned k_max, unsigned long n_max);

/// sum_m C(n,m) H_m = 2^n H_n - sum_i 2^(n-i)/i for 0<=n<=n_max.
IdentityReport verify_harmonic_binomial(unsigned long n_max);

/// sum_j C_j k!/(k-j)! = k/(k-1) and sum_j C_j (k-1)!/(k-j)! = 1/(k-1), 2<=k<=k_max.
IdentityReport verify_agreement(unsigned k_max,
                                const CoefficientFn& c = combinatorics::default_coefficients());

/// Power-series alternating value equals the telescoping closed form, 2<=k<=k_max.
IdentityReport verify_connecting(unsigned k_max,
                                 const CoefficientFn& c = combinatorics::default_coefficients());

/// The given C_j table against the recursive route, 1<=j<=j_max.
IdentityReport verify_c_recursion(unsigned j_max,
                                  const CoefficientFn& c = combinatorics::default_coefficients());

/// For 2<=k<=k_max: closed = power series (plain) and closed = recursive =
/// power series (alternating). Three route pairs per order.
IdentityReport verify_routes(unsigned k_max,
                             const CoefficientFn& c = combinatorics::default_coefficients());

/// sum_{i=1..n} C(i+k-1, k) = C(n+k, k+1) for 1<=k<=k_max, 1<=n<=n_max.
IdentityReport verify_hockey_stick(unsigned k_max, unsigned long n_max);

}  // namespace trisum::verify
