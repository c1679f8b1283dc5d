#ifndef GPM_ORACLES_HPP
#define GPM_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "gpm/types.hpp"

// Independent ground truths for the moment formula. None of these touch the
// support enumeration or the coefficient algorithms; they share only the
// core value types.

namespace gpm {

/// Gaussian integration-by-parts recurrence
///   E{X_k prod X_i^{b_i}} = mu_k E{prod X_i^{b_i}}
///                           + sum_j b_j phi_kj E{prod X_i^{b_i - delta_ij}},
/// peeling the first variable with positive exponent, memoized on the
/// exponent vector. Exact rationals throughout.
Rational stein_moment(const MultiIndex& a, const GaussianSpec& spec);

/// Central moment by perfect-pairing enumeration over the expanded variable
/// multiset; zero for odd total degree. Uses only the covariance of spec.
Rational isserlis_sum(const MultiIndex& a, const GaussianSpec& spec);

/// Lower-triangular L with L L^T = cov. A diagonal pivot below -1e-10 fails
/// with "covariance not positive semidefinite"; pivots within [-1e-10, 0]
/// are clamped to zero (semidefinite boundary).
std::vector<std::vector<double>> cholesky(const std::vector<std::vector<double>>& cov);

struct McReport {
  double estimate = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

/// Plain Monte Carlo: draws mu + L z with z from a seeded Box-Muller
/// generator, averages prod x_i^{a_i}, reports the sample mean and the
/// standard error of the mean. Deterministic for a fixed (seed, n_samples).
/// Requires n_samples >= 2 and a positive semidefinite covariance.
McReport mc_estimate(const MultiIndex& a, const GaussianSpec& spec,
                     std::int64_t n_samples, std::uint64_t seed);

}  // namespace gpm

#endif  // GPM_ORACLES_HPP
