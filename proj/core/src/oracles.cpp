#include "gpm/oracles.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>

namespace gpm {

namespace {

Rational stein_impl(std::vector<int>& b, const GaussianSpec& spec,
                    std::map<std::vector<int>, Rational>& memo) {
  int k = -1;
  for (std::size_t t = 0; t < b.size(); ++t)
    if (b[t] >= 1) {
      k = static_cast<int>(t);
      break;
    }
  if (k < 0) return Rational(1);  // E{1}

  if (auto hit = memo.find(b); hit != memo.end()) return hit->second;

  std::vector<int> rest = b;
  rest[static_cast<std::size_t>(k)] -= 1;

  Rational value = spec.mu(k) * stein_impl(rest, spec, memo);
  for (int j = 0; j < spec.dim(); ++j) {
    const int bj = rest[static_cast<std::size_t>(j)];
    if (bj == 0) continue;
    rest[static_cast<std::size_t>(j)] -= 1;
    value += bj * spec.cov(k, j) * stein_impl(rest, spec, memo);
    rest[static_cast<std::size_t>(j)] += 1;
  }

  memo.emplace(b, value);
  return value;
}

}  // namespace

Rational stein_moment(const MultiIndex& a, const GaussianSpec& spec) {
  if (a.dim() != spec.dim())
    throw std::invalid_argument("index and spec dimensions do not agree");
  std::vector<int> b(a.exponents().begin(), a.exponents().end());
  std::map<std::vector<int>, Rational> memo;
  return stein_impl(b, spec, memo);
}

namespace {

// Pair slot 0 with every later slot, recurse on the remainder.
Rational pairing_sum(std::vector<int>& slots, const GaussianSpec& spec) {
  if (slots.empty()) return Rational(1);
  Rational total(0);
  const int first = slots.front();
  for (std::size_t t = 1; t < slots.size(); ++t) {
    const int partner = slots[t];
    std::vector<int> rest;
    rest.reserve(slots.size() - 2);
    for (std::size_t u = 1; u < slots.size(); ++u)
      if (u != t) rest.push_back(slots[u]);
    total += spec.cov(first, partner) * pairing_sum(rest, spec);
  }
  return total;
}

}  // namespace

Rational isserlis_sum(const MultiIndex& a, const GaussianSpec& spec) {
  if (a.dim() != spec.dim())
    throw std::invalid_argument("index and spec dimensions do not agree");
  if (a.total_degree() % 2 != 0) return Rational(0);
  std::vector<int> slots;
  slots.reserve(static_cast<std::size_t>(a.total_degree()));
  for (int k = 0; k < a.dim(); ++k)
    for (int c = 0; c < a[k]; ++c) slots.push_back(k);
  return pairing_sum(slots, spec);
}

std::vector<std::vector<double>> cholesky(const std::vector<std::vector<double>>& cov) {
  const std::size_t n = cov.size();
  for (const auto& row : cov)
    if (row.size() != n) throw std::invalid_argument("covariance matrix is not square");

  constexpr double pivot_tol = -1e-10;
  std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    double d = cov[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= L[j][k] * L[j][k];
    if (d < pivot_tol)
      throw std::domain_error("covariance not positive semidefinite");
    L[j][j] = d > 0.0 ? std::sqrt(d) : 0.0;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = cov[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= L[i][k] * L[j][k];
      L[i][j] = L[j][j] > 0.0 ? s / L[j][j] : 0.0;
    }
  }
  return L;
}

namespace {

// Box-Muller over mt19937_64; deterministic for a fixed seed.
class NormalSource {
public:
  explicit NormalSource(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

private:
  double uniform01() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

double int_pow(double base, int exp) {
  double v = 1.0;
  for (int t = 0; t < exp; ++t) v *= base;
  return v;
}

}  // namespace

McReport mc_estimate(const MultiIndex& a, const GaussianSpec& spec,
                     std::int64_t n_samples, std::uint64_t seed) {
  if (a.dim() != spec.dim())
    throw std::invalid_argument("index and spec dimensions do not agree");
  if (n_samples < 2) throw std::invalid_argument("need at least two samples");

  const int n = spec.dim();
  std::vector<std::vector<double>> cov(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = spec.cov_f(i, j);
  const auto L = cholesky(cov);

  NormalSource normals(seed);
  std::vector<double> z(static_cast<std::size_t>(n));
  std::vector<double> x(static_cast<std::size_t>(n));

  // Welford running mean / second central moment
  double mean = 0.0, m2 = 0.0;
  for (std::int64_t s = 0; s < n_samples; ++s) {
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = normals.next();
    for (int i = 0; i < n; ++i) {
      double v = spec.mu_f(i);
      for (int j = 0; j <= i; ++j)
        v += L[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(i)] = v;
    }
    double g = 1.0;
    for (int i = 0; i < n; ++i) g *= int_pow(x[static_cast<std::size_t>(i)], a[i]);

    const double delta = g - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (g - mean);
  }

  const double variance = m2 / static_cast<double>(n_samples - 1);
  McReport report;
  report.estimate = mean;
  report.std_error = std::sqrt(variance / static_cast<double>(n_samples));
  report.n_samples = n_samples;
  report.seed = seed;
  return report;
}

}  // namespace gpm
