#pragma once

#include <span>
#include <string>
#include <vector>

#include "frim/fuzzifier.hpp"

namespace frim {

struct FuzzyListElement {
  Tid tid;
  double if_value;  // the itemset's degree in this transaction
  double rf_value;  // max degree of the terms ordered after the itemset
};

/// Vertical (tid, if, rf) list of one itemset. Elements are strictly
/// increasing by tid and both sums are maintained on append.
class FuzzyList {
 public:
  FuzzyList() = default;
  explicit FuzzyList(std::vector<Rank> itemset) : itemset_(std::move(itemset)) {}

  /// Throws std::invalid_argument if `tid` does not exceed the last tid or
  /// `if_value` is not positive.
  void append(Tid tid, double if_value, double rf_value);
  void reserve(std::size_t n) { elements_.reserve(n); }

  const std::vector<Rank>& itemset() const noexcept { return itemset_; }
  Rank last() const { return itemset_.back(); }
  const std::vector<FuzzyListElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  double sum_if() const noexcept { return sum_if_; }
  double sum_rf() const noexcept { return sum_rf_; }

 private:
  std::vector<Rank> itemset_;
  std::vector<FuzzyListElement> elements_;
  double sum_if_ = 0.0;
  double sum_rf_ = 0.0;
};

/// One list per retained term, in rank order.
std::vector<FuzzyList> build_initial_lists(const RevisedDatabase& revised);

/// Joins two lists sharing all but their last term, `y`'s last term ordered
/// after `x`'s. The joined if is the min of both; rf is taken from `y`.
/// Throws std::invalid_argument when the prefix or order precondition fails.
FuzzyList construct(const FuzzyList& x, const FuzzyList& y);

/// `[C.L] -> (4,0.4,1) (5,0.6,0.8) | 2.4 3.4`
std::string dump_list(const FuzzyList& list, const RevisedDatabase& revised);

}  // namespace frim
