#ifndef GPM_TYPES_HPP
#define GPM_TYPES_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gpm/numeric.hpp"

namespace gpm {

/// Exponent vector of a product moment E{X_1^{a_1} ... X_n^{a_n}}.
class MultiIndex {
public:
  explicit MultiIndex(std::vector<int> exponents);

  int dim() const { return static_cast<int>(a_.size()); }
  int operator[](int k) const { return a_[static_cast<std::size_t>(k)]; }
  long total_degree() const;
  std::span<const int> exponents() const { return a_; }

  bool operator==(const MultiIndex&) const = default;

private:
  std::vector<int> a_;
};

/// Flat position of (i, j), i <= j, in the row-major upper triangle
/// (0,0),(0,1),...,(0,n-1),(1,1),(1,2),...
inline std::size_t upper_index(int n, int i, int j) {
  return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i - 1) / 2 +
         static_cast<std::size_t>(j - i);
}

inline std::size_t upper_size(int n) {
  return static_cast<std::size_t>(n) * (n + 1) / 2;
}

/// Symmetric nonnegative integer matrix of pair exponents: one term of the
/// moment sum assigns l_ij copies of the covariance factor phi_ij. Only the
/// upper triangle is stored; get(i,j) with i > j reads the mirrored entry.
/// Immutable after construction.
class PairExponentMatrix {
public:
  explicit PairExponentMatrix(int n);                 // all zero
  PairExponentMatrix(int n, std::vector<int> upper);  // row-major upper triangle

  /// Builds from (i, j, value) triples; unspecified entries are zero.
  static PairExponentMatrix from_entries(int n,
                                         std::initializer_list<std::array<int, 3>> entries);

  int dim() const { return n_; }
  int get(int i, int j) const;
  long diag_sum() const;  // M_l
  std::span<const int> upper() const { return upper_; }

  /// Canonical term order: lexicographic on the stored upper triangle.
  auto operator<=>(const PairExponentMatrix&) const = default;

private:
  int n_ = 0;
  std::vector<int> upper_;
};

/// Residual exponents L_k left on the mean factors mu_k once a pair
/// assignment is fixed. A term is admissible iff every entry is >= 0.
class ResidualDegrees {
public:
  explicit ResidualDegrees(std::vector<int> degrees) : L_(std::move(degrees)) {}

  int dim() const { return static_cast<int>(L_.size()); }
  int operator[](int k) const { return L_[static_cast<std::size_t>(k)]; }
  bool admissible() const;
  std::span<const int> degrees() const { return L_; }

  bool operator==(const ResidualDegrees&) const = default;

private:
  std::vector<int> L_;
};

/// Mean vector and symmetric covariance matrix. Entries are stored as exact
/// rationals; a double view is precomputed for floating evaluation and
/// sampling. Immutable after construction.
class GaussianSpec {
public:
  /// Exact-mode construction: cov must be exactly symmetric.
  GaussianSpec(std::vector<Rational> mu, const std::vector<std::vector<Rational>>& cov);

  /// Float-mode construction: symmetry is checked within 1e-12 relative
  /// tolerance and the matrix is then symmetrized as (cov + cov^T)/2.
  GaussianSpec(const std::vector<double>& mu, const std::vector<std::vector<double>>& cov);

  int dim() const { return n_; }
  const Rational& mu(int k) const { return mu_[static_cast<std::size_t>(k)]; }
  const Rational& cov(int i, int j) const {
    return cov_[static_cast<std::size_t>(i) * n_ + j];
  }
  double mu_f(int k) const { return mu_d_[static_cast<std::size_t>(k)]; }
  double cov_f(int i, int j) const { return cov_d_[static_cast<std::size_t>(i) * n_ + j]; }

  bool centered() const;  // all means zero

  GaussianSpec with_zero_mean() const;
  /// The marginal spec of the contiguous variable block [lo, lo+count).
  GaussianSpec restricted(int lo, int count) const;

private:
  GaussianSpec() = default;
  void fill_doubles();

  int n_ = 0;
  std::vector<Rational> mu_;
  std::vector<Rational> cov_;  // dense n*n, exactly symmetric
  std::vector<double> mu_d_;
  std::vector<double> cov_d_;
};

/// One summand of the moment sum: d * prod phi_ij^{l_ij} * prod mu_j^{L_j}.
struct MomentTerm {
  PairExponentMatrix l;
  BigInt d;
  ResidualDegrees L;

  bool operator==(const MomentTerm&) const = default;
};

/// The full moment polynomial in canonical term order (no duplicate l).
struct MomentPolynomial {
  MultiIndex a;
  std::vector<MomentTerm> terms;

  bool operator==(const MomentPolynomial&) const = default;
};

}  // namespace gpm

#endif  // GPM_TYPES_HPP
