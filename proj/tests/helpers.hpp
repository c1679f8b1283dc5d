#ifndef GPM_TESTS_HELPERS_HPP
#define GPM_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "gpm/support.hpp"
#include "gpm/types.hpp"

// Test-side oracles and corpus generators. Everything here is independent
// of the enumeration/coefficient/evaluator code paths it is used to check.

namespace gpmtest {

/// Every exponent vector of the given length with total degree <= max_sum,
/// in lexicographic order.
inline std::vector<gpm::MultiIndex> all_indices(int dim, int max_sum) {
  std::vector<gpm::MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(dim), 0);
  while (true) {
    int sum = 0;
    for (int v : cur) sum += v;
    if (sum <= max_sum) out.emplace_back(cur);
    int p = dim - 1;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == max_sum) {
      cur[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    cur[static_cast<std::size_t>(p)] += 1;
  }
  return out;
}

/// Brute-force support set: every upper-triangle assignment with entries in
/// [0, max(a)], filtered by the admissibility predicate. Enumerated with the
/// last position fastest, i.e. in canonical lexicographic order.
inline std::vector<gpm::PairExponentMatrix> brute_force_support(const gpm::MultiIndex& a) {
  const int n = a.dim();
  const std::size_t positions = gpm::upper_size(n);
  int bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, a[k]);

  std::vector<gpm::PairExponentMatrix> out;
  std::vector<int> cur(positions, 0);
  while (true) {
    gpm::PairExponentMatrix l(n, cur);
    if (gpm::is_admissible(a, l)) out.push_back(std::move(l));
    std::size_t p = positions;
    while (p-- > 0) {
      if (cur[p] < bound) {
        cur[p] += 1;
        break;
      }
      cur[p] = 0;
      if (p == 0) return out;
    }
    if (positions == 0) return out;
  }
}

/// (A-1)!! for even A >= 0 by the double-factorial recursion.
inline gpm::BigInt double_factorial_odd(int even_degree) {
  if (even_degree == 0) return gpm::BigInt(1);
  return gpm::BigInt(even_degree - 1) * double_factorial_odd(even_degree - 2);
}

/// Deterministic random small rationals for corpus specs.
class RationalSource {
public:
  explicit RationalSource(unsigned seed) : rng_(seed) {}

  gpm::Rational small() {
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 3);
    return gpm::Rational(num(rng_), den(rng_));
  }

  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng_);
  }

private:
  std::mt19937 rng_;
};

/// A random PSD rational covariance as B^T B.
inline std::vector<std::vector<gpm::Rational>> random_psd(int n, RationalSource& src) {
  std::vector<std::vector<gpm::Rational>> b(static_cast<std::size_t>(n),
                                            std::vector<gpm::Rational>(static_cast<std::size_t>(n)));
  for (auto& row : b)
    for (auto& v : row) v = src.small();
  std::vector<std::vector<gpm::Rational>> cov(static_cast<std::size_t>(n),
                                              std::vector<gpm::Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gpm::Rational s(0);
      for (int k = 0; k < n; ++k)
        s += b[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
             b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      cov[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
    }
  return cov;
}

struct CorpusEntry {
  gpm::MultiIndex a;
  gpm::GaussianSpec spec;
};

/// Random specs with n <= 3, total degree <= max_degree, PSD covariance.
inline std::vector<CorpusEntry> random_corpus(int count, unsigned seed, bool centered,
                                              int max_degree = 7) {
  RationalSource src(seed);
  std::vector<CorpusEntry> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const int n = src.uniform(1, 3);
    std::vector<int> exps(static_cast<std::size_t>(n));
    int sum = 0;
    for (auto& e : exps) {
      e = src.uniform(0, 4);
      sum += e;
    }
    if (sum > max_degree) continue;
    std::vector<gpm::Rational> mu(static_cast<std::size_t>(n), gpm::Rational(0));
    if (!centered)
      for (auto& m : mu) m = src.small();
    out.push_back(CorpusEntry{gpm::MultiIndex(exps),
                              gpm::GaussianSpec(std::move(mu), random_psd(n, src))});
  }
  return out;
}

}  // namespace gpmtest

#endif  // GPM_TESTS_HELPERS_HPP
