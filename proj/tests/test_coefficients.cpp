#include <doctest.h>

#include <stdexcept>

#include "gpm/coefficients.hpp"
#include "gpm/support.hpp"
#include "helpers.hpp"

using namespace gpm;

TEST_SUITE("coefficients") {
  TEST_CASE("factorial table") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
  }

  TEST_CASE("one-variable coefficients") {
    CHECK(coefficient_univariate(4, 1) == 6);
    CHECK(coefficient_univariate(4, 2) == 3);
    CHECK(coefficient_univariate(6, 3) == 15);
    CHECK(coefficient_univariate(0, 0) == 1);
    CHECK_THROWS_AS(coefficient_univariate(4, 3), std::domain_error);
    CHECK_THROWS_AS(coefficient_univariate(4, -1), std::domain_error);
    CHECK_THROWS_AS(coefficient_univariate(-2, 0), std::domain_error);
  }

  TEST_CASE("one-variable coefficients sum to the pairing count") {
    // sum over l of a!/(2^l l! (a-2l)!) at phi=mu=1 is E{Y^a} for Y~N(1,1);
    // with mu=0 only the top term survives and equals (a-1)!!
    for (int a1 = 0; a1 <= 12; a1 += 2)
      CHECK(coefficient_univariate(a1, a1 / 2) == gpmtest::double_factorial_odd(a1));
  }

  TEST_CASE("closed-form examples") {
    CHECK(coefficient_closed_form(MultiIndex({1, 1}),
                                  PairExponentMatrix::from_entries(2, {{0, 1, 1}})) == 1);
    CHECK(coefficient_closed_form(MultiIndex({2, 2}),
                                  PairExponentMatrix::from_entries(2, {{0, 1, 2}})) == 2);
    CHECK(coefficient_closed_form(MultiIndex({4}),
                                  PairExponentMatrix::from_entries(1, {{0, 0, 2}})) == 3);
    CHECK(coefficient_closed_form(MultiIndex({3, 1, 2}), PairExponentMatrix(3)) == 1);
    CHECK(coefficient_closed_form(MultiIndex({0}), PairExponentMatrix(1)) == 1);
  }

  TEST_CASE("closed form rejects inadmissible matrices") {
    CHECK_THROWS_AS(coefficient_closed_form(MultiIndex({1, 1}),
                                            PairExponentMatrix::from_entries(2, {{0, 0, 1}})),
                    std::domain_error);
    CHECK_THROWS_AS(coefficient_closed_form(MultiIndex({2}), PairExponentMatrix(2)),
                    std::invalid_argument);
  }

  TEST_CASE("recursive examples match the closed form") {
    CHECK(coefficient_recursive(MultiIndex({1, 1}),
                                PairExponentMatrix::from_entries(2, {{0, 1, 1}})) == 1);
    CHECK(coefficient_recursive(MultiIndex({2, 2}),
                                PairExponentMatrix::from_entries(2, {{0, 1, 2}})) == 2);
  }

  TEST_CASE("two algorithms agree on every admissible matrix of (2,3,1)") {
    MultiIndex a({2, 3, 1});
    for (const PairExponentMatrix& l : enumerate_support(a))
      CHECK(coefficient_recursive(a, l) == coefficient_closed_form(a, l));
  }

  TEST_CASE("two algorithms agree across dimensions 1..4") {
    // the acceptance suite sweeps the full n<=4, sum<=8 grid; keep the unit
    // run quick with a thinner slice
    for (const MultiIndex& a : gpmtest::all_indices(4, 5)) {
      for (const PairExponentMatrix& l : enumerate_support(a)) {
        BigInt closed = coefficient_closed_form(a, l);
        CHECK(coefficient_recursive(a, l) == closed);
        CHECK(closed > 0);
      }
    }
  }

  TEST_CASE("coefficients across a multi-index sum to a one-variable evaluation") {
    // with every phi_ij = mu_j = 1 the moment collapses to E{Y^A}, Y~N(1,1)
    for (const MultiIndex& a : gpmtest::all_indices(3, 6)) {
      BigInt sum(0);
      for (const PairExponentMatrix& l : enumerate_support(a))
        sum += coefficient_closed_form(a, l);
      const int A = static_cast<int>(a.total_degree());
      BigInt expected(0);
      for (int l = 0; 2 * l <= A; ++l) expected += coefficient_univariate(A, l);
      CHECK(sum == expected);
    }
  }

  TEST_CASE("raw-parts evaluation matches the checked entry point") {
    MultiIndex a({3, 2, 3});
    for (const PairExponentMatrix& l : enumerate_support(a)) {
      ResidualDegrees L = residual_degrees(a, l);
      CHECK(detail::coefficient_from_parts(a.exponents(), l.upper(), L.degrees()) ==
            coefficient_closed_form(a, l));
    }
  }
}
