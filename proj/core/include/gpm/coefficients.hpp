#ifndef GPM_COEFFICIENTS_HPP
#define GPM_COEFFICIENTS_HPP

#include "gpm/types.hpp"

namespace gpm {

/// n! from a process-wide memo table, grown on demand under a lock and
/// read-only afterwards.
const BigInt& factorial(int n);

/// One-variable coefficient a1! / (2^l l! (a1 - 2l)!); requires
/// 0 <= l <= floor(a1/2).
BigInt coefficient_univariate(int a1, int l);

/// Closed-form coefficient (prod_k a_k!) / (2^{M_l} prod_{i<=j} l_ij!
/// prod_j L_j!). Requires is_admissible(a, l). The division is asserted to
/// be exact; a remainder raises internal_error.
BigInt coefficient_closed_form(const MultiIndex& a, const PairExponentMatrix& l);

/// The same coefficient computed by induction on the dimension: peel the
/// last variable, multiply the cross-pair prefactor
///   (prod_{k<m} a_k!) a_m! / ((prod_{k<m} l_km!) (prod_{k<m} (a_k-l_km)!)
///    (a_m - sum_{k<m} l_km)!),
/// split off the univariate factor for the peeled variable, and recurse on
/// the interior matrix with exponents a_k - l_km. Base case is the
/// one-variable coefficient.
BigInt coefficient_recursive(const MultiIndex& a, const PairExponentMatrix& l);

namespace detail {
/// Closed form from raw parts; used by the streaming evaluator to avoid
/// materializing matrices. residuals must equal the residual degrees of
/// (exponents, upper) and be nonnegative.
BigInt coefficient_from_parts(std::span<const int> exponents, std::span<const int> upper,
                              std::span<const int> residuals);
}  // namespace detail

}  // namespace gpm

#endif  // GPM_COEFFICIENTS_HPP
