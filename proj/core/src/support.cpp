#include "gpm/support.hpp"

namespace gpm {

ResidualDegrees residual_degrees(const MultiIndex& a, const PairExponentMatrix& l) {
  const int n = a.dim();
  if (l.dim() != n)
    throw std::invalid_argument("exponent matrix dimension does not match index");
  std::vector<int> L(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    int used = l.get(k, k);  // the extra l_kk beyond the row sum
    for (int j = 0; j < n; ++j) used += l.get(j, k);
    L[static_cast<std::size_t>(k)] = a[k] - used;
  }
  return ResidualDegrees(std::move(L));
}

bool is_admissible(const MultiIndex& a, const PairExponentMatrix& l) {
  return residual_degrees(a, l).admissible();
}

SupportIterator::SupportIterator(MultiIndex a) : a_(std::move(a)) {
  const int n = a_.dim();
  pos_i_.reserve(upper_size(n));
  pos_j_.reserve(upper_size(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      pos_i_.push_back(i);
      pos_j_.push_back(j);
    }
  entry_.assign(upper_size(n), 0);
  resid_.assign(a_.exponents().begin(), a_.exponents().end());
}

bool SupportIterator::can_increment(std::size_t p) const {
  const int i = pos_i_[p], j = pos_j_[p];
  if (i == j) return resid_[static_cast<std::size_t>(i)] >= 2;
  return resid_[static_cast<std::size_t>(i)] >= 1 && resid_[static_cast<std::size_t>(j)] >= 1;
}

void SupportIterator::consume(std::size_t p) {
  const int i = pos_i_[p], j = pos_j_[p];
  if (i == j) {
    resid_[static_cast<std::size_t>(i)] -= 2;
  } else {
    resid_[static_cast<std::size_t>(i)] -= 1;
    resid_[static_cast<std::size_t>(j)] -= 1;
  }
}

void SupportIterator::release(std::size_t p) {
  const int i = pos_i_[p], j = pos_j_[p];
  const int e = entry_[p];
  if (i == j) {
    resid_[static_cast<std::size_t>(i)] += 2 * e;
  } else {
    resid_[static_cast<std::size_t>(i)] += e;
    resid_[static_cast<std::size_t>(j)] += e;
  }
}

bool SupportIterator::advance() {
  if (done_) return false;
  if (fresh_) {
    // the all-zero matrix is admissible for every index
    fresh_ = false;
    return true;
  }
  // lexicographic successor: bump the rightmost position whose budgets
  // allow one more unit, zeroing everything to its right
  for (std::size_t p = entry_.size(); p-- > 0;) {
    if (can_increment(p)) {
      entry_[p] += 1;
      consume(p);
      return true;
    }
    release(p);
    entry_[p] = 0;
  }
  done_ = true;
  return false;
}

PairExponentMatrix SupportIterator::current() const {
  return PairExponentMatrix(a_.dim(), entry_);
}

void SupportRange::iterator::step() {
  if (!state_) return;
  if (state_->advance()) {
    current_ = std::make_shared<PairExponentMatrix>(state_->current());
  } else {
    state_.reset();
    current_.reset();
  }
}

SupportRange enumerate_support(MultiIndex a) { return SupportRange(std::move(a)); }

BigInt count_support(const MultiIndex& a) {
  SupportIterator it(a);
  BigInt count = 0;
  while (it.advance()) ++count;
  return count;
}

}  // namespace gpm
