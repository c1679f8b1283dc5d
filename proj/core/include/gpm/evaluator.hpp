#ifndef GPM_EVALUATOR_HPP
#define GPM_EVALUATOR_HPP

#include <string>

#include "gpm/types.hpp"

namespace gpm {

/// Assembles the full moment polynomial: one term per admissible
/// pair-exponent matrix, in canonical order.
MomentPolynomial build_polynomial(const MultiIndex& a);

/// Sums d * prod phi_ij^{l_ij} * prod mu_j^{L_j} over the terms.
/// Exact mode folds rationals in canonical order; floating mode uses
/// compensated (Kahan) summation in the same order. 0^0 counts as 1.
Scalar evaluate(const MomentPolynomial& poly, const GaussianSpec& spec, NumericMode mode);
Rational evaluate_exact(const MomentPolynomial& poly, const GaussianSpec& spec);

/// The product moment itself: folds terms straight off the support stream
/// without materializing the polynomial.
Scalar moment(const MultiIndex& a, const GaussianSpec& spec, NumericMode mode);
Rational moment_exact(const MultiIndex& a, const GaussianSpec& spec);

enum class SymbolicFormat { text, latex };

/// Deterministic rendering in canonical term order. Text mode writes
/// covariance symbols as c{i}{j} and means as m{j} (1-based), latex mode as
/// \varphi_{ij} and \mu_{j}. Unit coefficients and unit exponents are
/// omitted; the zero polynomial renders as "0".
std::string to_symbolic(const MomentPolynomial& poly, SymbolicFormat format);

/// Formal partial derivative with respect to the covariance symbol phi_ij,
/// i != j (either order). The result is the canonical polynomial over the
/// exponents reduced at i and j; it is the zero polynomial when a_i or a_j
/// is 0. Derivatives with respect to a variance entry (i == j) are not
/// supported and throw.
MomentPolynomial differentiate_wrt_cov(const MultiIndex& a, int i, int j);

/// All coefficients multiplied by a constant factor (term order unchanged).
MomentPolynomial scale_coefficients(MomentPolynomial poly, const BigInt& factor);

}  // namespace gpm

#endif  // GPM_EVALUATOR_HPP
