#include "gpm/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gpm {

MultiIndex::MultiIndex(std::vector<int> exponents) : a_(std::move(exponents)) {
  if (a_.empty()) throw std::invalid_argument("exponent vector must be non-empty");
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (a_[k] < 0) {
      throw std::invalid_argument("negative exponent at position " +
                                  std::to_string(k + 1));
    }
  }
}

long MultiIndex::total_degree() const {
  return std::accumulate(a_.begin(), a_.end(), 0L);
}

PairExponentMatrix::PairExponentMatrix(int n) : n_(n), upper_(upper_size(n), 0) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
}

PairExponentMatrix::PairExponentMatrix(int n, std::vector<int> upper)
    : n_(n), upper_(std::move(upper)) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (upper_.size() != upper_size(n))
    throw std::invalid_argument("upper triangle has wrong length");
  for (int e : upper_)
    if (e < 0) throw std::invalid_argument("pair exponents must be nonnegative");
}

PairExponentMatrix PairExponentMatrix::from_entries(
    int n, std::initializer_list<std::array<int, 3>> entries) {
  PairExponentMatrix m(n);
  for (const auto& [i, j, v] : entries) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw std::invalid_argument("pair index out of range");
    if (v < 0) throw std::invalid_argument("pair exponents must be nonnegative");
    m.upper_[upper_index(n, std::min(i, j), std::max(i, j))] = v;
  }
  return m;
}

int PairExponentMatrix::get(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("pair index out of range");
  if (i > j) std::swap(i, j);
  return upper_[upper_index(n_, i, j)];
}

long PairExponentMatrix::diag_sum() const {
  long m = 0;
  for (int k = 0; k < n_; ++k) m += upper_[upper_index(n_, k, k)];
  return m;
}

bool ResidualDegrees::admissible() const {
  return std::all_of(L_.begin(), L_.end(), [](int v) { return v >= 0; });
}

namespace {

void check_square(std::size_t n, std::size_t rows, std::size_t cols) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  if (rows != n || cols != n)
    throw std::invalid_argument("mean and covariance dimensions do not agree");
}

}  // namespace

GaussianSpec::GaussianSpec(std::vector<Rational> mu,
                           const std::vector<std::vector<Rational>>& cov)
    : n_(static_cast<int>(mu.size())), mu_(std::move(mu)) {
  check_square(mu_.size(), cov.size(), cov.empty() ? 0 : cov[0].size());
  for (const auto& row : cov)
    if (row.size() != mu_.size())
      throw std::invalid_argument("covariance matrix is not square");
  cov_.resize(mu_.size() * mu_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (cov[i][j] != cov[j][i])
        throw std::invalid_argument("covariance not symmetric");
      cov_[static_cast<std::size_t>(i) * n_ + j] = cov[i][j];
    }
  fill_doubles();
}

GaussianSpec::GaussianSpec(const std::vector<double>& mu,
                           const std::vector<std::vector<double>>& cov)
    : n_(static_cast<int>(mu.size())) {
  check_square(mu.size(), cov.size(), cov.empty() ? 0 : cov[0].size());
  for (const auto& row : cov)
    if (row.size() != mu.size())
      throw std::invalid_argument("covariance matrix is not square");
  constexpr double rel_tol = 1e-12;
  mu_.reserve(mu.size());
  for (double m : mu) mu_.emplace_back(m);
  cov_.resize(mu.size() * mu.size());
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      double x = cov[i][j], y = cov[j][i];
      if (std::abs(x - y) > rel_tol * std::max(std::abs(x), std::abs(y)))
        throw std::invalid_argument("covariance not symmetric");
      Rational sym = (Rational(x) + Rational(y)) / 2;
      cov_[static_cast<std::size_t>(i) * n_ + j] = sym;
      cov_[static_cast<std::size_t>(j) * n_ + i] = sym;
    }
  }
  fill_doubles();
}

void GaussianSpec::fill_doubles() {
  mu_d_.resize(mu_.size());
  cov_d_.resize(cov_.size());
  for (std::size_t k = 0; k < mu_.size(); ++k)
    mu_d_[k] = mu_[k].convert_to<double>();
  for (std::size_t k = 0; k < cov_.size(); ++k)
    cov_d_[k] = cov_[k].convert_to<double>();
}

bool GaussianSpec::centered() const {
  return std::all_of(mu_.begin(), mu_.end(), [](const Rational& m) { return m == 0; });
}

GaussianSpec GaussianSpec::with_zero_mean() const {
  GaussianSpec out;
  out.n_ = n_;
  out.mu_.assign(mu_.size(), Rational(0));
  out.cov_ = cov_;
  out.fill_doubles();
  return out;
}

GaussianSpec GaussianSpec::restricted(int lo, int count) const {
  if (lo < 0 || count < 1 || lo + count > n_)
    throw std::invalid_argument("block range out of bounds");
  GaussianSpec out;
  out.n_ = count;
  out.mu_.assign(mu_.begin() + lo, mu_.begin() + lo + count);
  out.cov_.resize(static_cast<std::size_t>(count) * count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      out.cov_[static_cast<std::size_t>(i) * count + j] = cov(lo + i, lo + j);
  out.fill_doubles();
  return out;
}

}  // namespace gpm
