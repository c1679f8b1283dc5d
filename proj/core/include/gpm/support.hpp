#ifndef GPM_SUPPORT_HPP
#define GPM_SUPPORT_HPP

#include <iterator>
#include <memory>

#include "gpm/types.hpp"

namespace gpm {

/// L_k = a_k - 2 l_kk - sum_{j != k} l_jk for each variable. May contain
/// negative entries; admissibility is a separate predicate.
ResidualDegrees residual_degrees(const MultiIndex& a, const PairExponentMatrix& l);

/// True iff every residual degree is nonnegative.
bool is_admissible(const MultiIndex& a, const PairExponentMatrix& l);

/// Streams every admissible pair-exponent matrix for a, each exactly once,
/// in canonical (lexicographic, row-major upper-triangle) order.
///
/// Backtracks over upper-triangle positions (0,0),(0,1),...,(1,1),...
/// keeping a residual budget per variable: a diagonal entry consumes two
/// units of its row budget, an off-diagonal entry one unit of each. Every
/// completed assignment is admissible by construction, so no post-filtering
/// happens. Single consumer; advance() then read the current state.
class SupportIterator {
public:
  explicit SupportIterator(MultiIndex a);

  /// Moves to the next admissible matrix; false once exhausted.
  bool advance();

  // Views into the current state; valid after advance() returned true and
  // until the next advance().
  std::span<const int> entries() const { return entry_; }    // upper triangle
  std::span<const int> residuals() const { return resid_; }  // L_k
  PairExponentMatrix current() const;

  const MultiIndex& index() const { return a_; }

private:
  bool can_increment(std::size_t p) const;
  void consume(std::size_t p);
  void release(std::size_t p);

  MultiIndex a_;
  std::vector<int> pos_i_, pos_j_;  // position -> (row, col)
  std::vector<int> entry_;
  std::vector<int> resid_;
  bool fresh_ = true;
  bool done_ = false;
};

/// Lazily enumerates the support set; usable in range-for. The underlying
/// iterator state is shared between copies (single-pass input range).
class SupportRange {
public:
  explicit SupportRange(MultiIndex a) : a_(std::move(a)) {}

  class iterator {
  public:
    using value_type = PairExponentMatrix;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;  // end sentinel
    explicit iterator(const MultiIndex& a)
        : state_(std::make_shared<SupportIterator>(a)) {
      step();
    }

    const PairExponentMatrix& operator*() const { return *current_; }
    const PairExponentMatrix* operator->() const { return current_.get(); }
    iterator& operator++() {
      step();
      return *this;
    }
    void operator++(int) { step(); }

    bool operator==(const iterator& other) const {
      return (state_ == nullptr) == (other.state_ == nullptr);
    }

  private:
    void step();

    std::shared_ptr<SupportIterator> state_;
    std::shared_ptr<PairExponentMatrix> current_;
  };

  iterator begin() const { return iterator(a_); }
  iterator end() const { return iterator(); }

private:
  MultiIndex a_;
};

SupportRange enumerate_support(MultiIndex a);

/// |S_a|, by the same backtracking without materializing matrices.
BigInt count_support(const MultiIndex& a);

}  // namespace gpm

#endif  // GPM_SUPPORT_HPP
