#include <doctest.h>

#include "trisum/verify.hpp"

using namespace trisum;
using namespace trisum::verify;

namespace {

// C_j table with a single entry replaced.
CoefficientFn perturbed(unsigned index, Rational value) {
  return [index, value](unsigned j) {
    return j == index ? value : combinatorics::coefficient_c(j);
  };
}

void check_clean(const IdentityReport& report, unsigned long expected_checks) {
  CAPTURE(report.suite);
  CHECK(report.passed);
  CHECK(report.checked == expected_checks);
  CHECK_FALSE(report.counterexample.has_value());
}

}  // namespace

TEST_CASE("suite sizes on small grids") {
  check_clean(verify_partial_fraction(2, 1), 1);
  check_clean(verify_partial_fraction(10, 100), 900);
  check_clean(verify_harmonic_binomial(0), 1);
  check_clean(verify_harmonic_binomial(30), 31);
  check_clean(verify_agreement(5), 4);
  check_clean(verify_connecting(5), 4);
  check_clean(verify_c_recursion(3), 3);
  check_clean(verify_routes(4), 9);
  check_clean(verify_hockey_stick(3, 7), 21);
}

TEST_CASE("ranges are reported in sweep order") {
  const auto report = verify_partial_fraction(6, 11);
  REQUIRE(report.ranges.size() == 2);
  CHECK(report.ranges[0].first == "k");
  CHECK(report.ranges[0].second == std::pair<long, long>{2, 6});
  CHECK(report.ranges[1].first == "n");
  CHECK(report.ranges[1].second == std::pair<long, long>{1, 11});
  CHECK(verify_partial_fraction(6, 11).suite == "partial-fraction");
}

TEST_CASE("bad bounds are rejected") {
  CHECK_THROWS_AS(verify_partial_fraction(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_partial_fraction(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_agreement(1), std::invalid_argument);
  CHECK_THROWS_AS(verify_connecting(1), std::invalid_argument);
  CHECK_THROWS_AS(verify_routes(1), std::invalid_argument);
  CHECK_THROWS_AS(verify_c_recursion(0), std::invalid_argument);
  CHECK_THROWS_AS(verify_hockey_stick(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_hockey_stick(3, 0), std::invalid_argument);
}

TEST_CASE("larger sweeps pass") {
  check_clean(verify_partial_fraction(20, 100), 19 * 100);
  check_clean(verify_harmonic_binomial(100), 101);
  check_clean(verify_agreement(40), 39);
  check_clean(verify_connecting(30), 29);
  check_clean(verify_c_recursion(60), 60);
  check_clean(verify_routes(25), 72);
  check_clean(verify_hockey_stick(20, 100), 2000);
}

TEST_CASE("a wrong C_2 is caught at k = 2") {
  const auto bad = perturbed(2, Rational(2));

  const auto agreement = verify_agreement(10, bad);
  CHECK_FALSE(agreement.passed);
  CHECK(agreement.checked == 1);
  REQUIRE(agreement.counterexample.has_value());
  CHECK(agreement.counterexample->parameters.at("k") == 2);
  CHECK(agreement.counterexample->lhs != agreement.counterexample->rhs);

  const auto connecting = verify_connecting(10, bad);
  CHECK_FALSE(connecting.passed);
  REQUIRE(connecting.counterexample.has_value());
  CHECK(connecting.counterexample->parameters.at("k") == 2);

  const auto recursion = verify_c_recursion(10, bad);
  CHECK_FALSE(recursion.passed);
  REQUIRE(recursion.counterexample.has_value());
  CHECK(recursion.counterexample->parameters.at("j") == 2);
  CHECK(recursion.counterexample->lhs == "2");

  const auto routes = verify_routes(10, bad);
  CHECK_FALSE(routes.passed);
  REQUIRE(routes.counterexample.has_value());
  CHECK(routes.counterexample->parameters.at("k") == 2);
}

TEST_CASE("a wrong C_5 first shows up at k = 5") {
  const auto bad = perturbed(5, combinatorics::coefficient_c(5) + Rational(BigInt(1), BigInt(1000)));
  for (const auto& report : {verify_agreement(12, bad), verify_connecting(12, bad)}) {
    CAPTURE(report.suite);
    CHECK_FALSE(report.passed);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.counterexample->parameters.at("k") == 5);
    CHECK(report.checked == 4);
  }
  const auto recursion = verify_c_recursion(12, bad);
  REQUIRE(recursion.counterexample.has_value());
  CHECK(recursion.counterexample->parameters.at("j") == 5);
}

TEST_CASE("reports are deterministic") {
  const auto bad = perturbed(3, Rational(7));
  const auto a = verify_routes(9, bad);
  const auto b = verify_routes(9, bad);
  CHECK(a.checked == b.checked);
  REQUIRE(a.counterexample.has_value());
  REQUIRE(b.counterexample.has_value());
  CHECK(a.counterexample->parameters == b.counterexample->parameters);
  CHECK(a.counterexample->lhs == b.counterexample->lhs);
  CHECK(a.counterexample->rhs == b.counterexample->rhs);
}
