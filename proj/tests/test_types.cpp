#include <doctest.h>

#include "gpm/support.hpp"
#include "gpm/types.hpp"

using namespace gpm;

TEST_SUITE("types") {
  TEST_CASE("multi-index validation") {
    MultiIndex a({2, 3, 1});
    CHECK(a.dim() == 3);
    CHECK(a.total_degree() == 6);

    MultiIndex degenerate({0});
    CHECK(degenerate.dim() == 1);
    CHECK(degenerate.total_degree() == 0);

    CHECK_THROWS_WITH_AS(MultiIndex({2, -1}), "negative exponent at position 2",
                         std::invalid_argument);
    CHECK_THROWS_AS(MultiIndex({}), std::invalid_argument);
  }

  TEST_CASE("pair matrix symmetric access over small dimensions") {
    for (int n = 1; n <= 4; ++n) {
      std::vector<int> upper(upper_size(n));
      for (std::size_t p = 0; p < upper.size(); ++p) upper[p] = static_cast<int>(p + 1);
      PairExponentMatrix l(n, upper);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(l.get(i, j) == l.get(j, i));
    }
  }

  TEST_CASE("diag_sum equals the sum of diagonal entries") {
    PairExponentMatrix l = PairExponentMatrix::from_entries(3, {{0, 0, 2}, {1, 1, 1}, {0, 2, 5}});
    long diag = 0;
    for (int k = 0; k < 3; ++k) diag += l.get(k, k);
    CHECK(l.diag_sum() == diag);
    CHECK(l.diag_sum() == 3);
    CHECK(l.get(2, 0) == 5);
  }

  TEST_CASE("pair matrix rejects bad input") {
    CHECK_THROWS_AS(PairExponentMatrix(0), std::invalid_argument);
    CHECK_THROWS_AS(PairExponentMatrix(2, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PairExponentMatrix(2, {1, -1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PairExponentMatrix::from_entries(2, {{0, 2, 1}}), std::invalid_argument);
  }

  TEST_CASE("residuals match the literal formula with symmetric access") {
    // a_k - l_kk - sum_j l_jk, the sum running over every j including k
    MultiIndex a({4, 3, 5});
    PairExponentMatrix l =
        PairExponentMatrix::from_entries(3, {{0, 0, 1}, {0, 1, 1}, {1, 2, 2}, {2, 2, 1}});
    ResidualDegrees L = residual_degrees(a, l);
    for (int k = 0; k < 3; ++k) {
      int direct = a[k] - l.get(k, k);
      for (int j = 0; j < 3; ++j) direct -= l.get(j, k);
      CHECK(L[k] == direct);
    }
  }

  TEST_CASE("gaussian spec construction and validation") {
    GaussianSpec spec({Rational(0), Rational(0)},
                      {{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1)}});
    CHECK(spec.dim() == 2);
    CHECK(spec.cov(0, 1) == Rational(1, 2));
    CHECK(spec.centered());

    GaussianSpec one_dim({Rational(1)}, {{Rational(2)}});
    CHECK(one_dim.dim() == 1);

    CHECK_THROWS_WITH_AS(
        GaussianSpec({Rational(0), Rational(0)},
                     {{Rational(1), Rational(1, 2)}, {Rational(2, 5), Rational(1)}}),
        "covariance not symmetric", std::invalid_argument);
    CHECK_THROWS_AS(GaussianSpec({Rational(0)}, {{Rational(1), Rational(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GaussianSpec(std::vector<Rational>{},
                                 std::vector<std::vector<Rational>>{}),
                    std::invalid_argument);
  }

  TEST_CASE("float construction symmetrizes within tolerance") {
    const double eps = 1e-15;
    const std::vector<double> mu_d = {0.0, 0.0};
    GaussianSpec spec(mu_d, {{1.0, 0.5 + eps}, {0.5 - eps, 1.0}});
    CHECK(spec.cov(0, 1) == spec.cov(1, 0));
    CHECK(spec.cov(0, 1) == (Rational(0.5 + eps) + Rational(0.5 - eps)) / 2);

    const std::vector<std::vector<double>> lopsided = {{1.0, 0.5}, {0.4, 1.0}};
    CHECK_THROWS_WITH_AS(GaussianSpec(mu_d, lopsided), "covariance not symmetric",
                         std::invalid_argument);
  }

  TEST_CASE("zero-mean and block restriction views") {
    GaussianSpec spec({Rational(1), Rational(2), Rational(3)},
                      {{Rational(2), Rational(1), Rational(0)},
                       {Rational(1), Rational(3), Rational(0)},
                       {Rational(0), Rational(0), Rational(5)}});
    CHECK_FALSE(spec.centered());
    CHECK(spec.with_zero_mean().centered());
    CHECK(spec.with_zero_mean().cov(0, 1) == Rational(1));

    GaussianSpec left = spec.restricted(0, 2);
    CHECK(left.dim() == 2);
    CHECK(left.mu(1) == Rational(2));
    CHECK(left.cov(0, 1) == Rational(1));
    GaussianSpec right = spec.restricted(2, 1);
    CHECK(right.cov(0, 0) == Rational(5));
    CHECK_THROWS_AS(spec.restricted(2, 2), std::invalid_argument);
  }
}
