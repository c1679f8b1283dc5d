#include "gpm/coefficients.hpp"

#include <deque>
#include <mutex>

#include "gpm/support.hpp"

namespace gpm {

const BigInt& factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  static std::deque<BigInt> table{BigInt(1)};  // deque keeps references stable
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  while (static_cast<int>(table.size()) <= n)
    table.push_back(table.back() * static_cast<int>(table.size()));
  return table[static_cast<std::size_t>(n)];
}

BigInt coefficient_univariate(int a1, int l) {
  if (a1 < 0) throw std::domain_error("negative exponent");
  if (l < 0 || 2 * l > a1)
    throw std::domain_error("pair exponent out of range for univariate coefficient");
  BigInt den = pow_int(BigInt(2), l) * factorial(l) * factorial(a1 - 2 * l);
  return exact_div(factorial(a1), den);
}

namespace detail {

BigInt coefficient_from_parts(std::span<const int> exponents, std::span<const int> upper,
                              std::span<const int> residuals) {
  const int n = static_cast<int>(exponents.size());
  BigInt num = 1;
  for (int k = 0; k < n; ++k) num *= factorial(exponents[static_cast<std::size_t>(k)]);

  long diag = 0;
  BigInt den = 1;
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++p) {
      if (i == j) diag += upper[p];
      den *= factorial(upper[p]);
    }
  for (int k = 0; k < n; ++k) den *= factorial(residuals[static_cast<std::size_t>(k)]);
  den *= pow_int(BigInt(2), diag);

  return exact_div(num, den);
}

}  // namespace detail

BigInt coefficient_closed_form(const MultiIndex& a, const PairExponentMatrix& l) {
  ResidualDegrees L = residual_degrees(a, l);
  if (!L.admissible())
    throw std::domain_error("exponent matrix is not admissible for this index");
  return detail::coefficient_from_parts(a.exponents(), l.upper(), L.degrees());
}

namespace {

// One induction step down from dimension m: cross-pair prefactor times the
// univariate factor of the peeled variable, then recurse on the interior.
BigInt recursive_impl(std::vector<int>& exps, const PairExponentMatrix& l, int m) {
  if (m == 1) return coefficient_univariate(exps[0], l.get(0, 0));

  const int last = m - 1;
  int cross = 0;
  BigInt num = factorial(exps[static_cast<std::size_t>(last)]);
  BigInt den = 1;
  for (int k = 0; k < last; ++k) {
    const int lkm = l.get(k, last);
    const int ak = exps[static_cast<std::size_t>(k)];
    cross += lkm;
    num *= factorial(ak);
    den *= factorial(lkm);
    den *= factorial(ak - lkm);
  }
  const int reduced_last = exps[static_cast<std::size_t>(last)] - cross;
  den *= factorial(reduced_last);
  BigInt prefactor = exact_div(num, den);

  BigInt peeled = coefficient_univariate(reduced_last, l.get(last, last));

  for (int k = 0; k < last; ++k) exps[static_cast<std::size_t>(k)] -= l.get(k, last);
  BigInt interior = recursive_impl(exps, l, last);
  for (int k = 0; k < last; ++k) exps[static_cast<std::size_t>(k)] += l.get(k, last);

  return prefactor * peeled * interior;
}

}  // namespace

BigInt coefficient_recursive(const MultiIndex& a, const PairExponentMatrix& l) {
  if (!is_admissible(a, l))
    throw std::domain_error("exponent matrix is not admissible for this index");
  std::vector<int> exps(a.exponents().begin(), a.exponents().end());
  return recursive_impl(exps, l, a.dim());
}

}  // namespace gpm
