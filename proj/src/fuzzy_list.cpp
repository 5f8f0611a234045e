#include "frim/fuzzy_list.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "frim/format.hpp"

namespace frim {

void FuzzyList::append(Tid tid, double if_value, double rf_value) {
  if (!elements_.empty() && tid <= elements_.back().tid)
    throw std::invalid_argument("fuzzy-list tids must be strictly increasing");
  if (!(if_value > 0.0)) throw std::invalid_argument("fuzzy-list if value must be positive");
  elements_.push_back({tid, if_value, rf_value});
  sum_if_ += if_value;
  sum_rf_ += rf_value;
}

std::vector<FuzzyList> build_initial_lists(const RevisedDatabase& revised) {
  std::vector<FuzzyList> lists;
  lists.reserve(revised.terms().size());
  for (std::size_t r = 0; r < revised.terms().size(); ++r)
    lists.emplace_back(std::vector<Rank>{static_cast<Rank>(r)});

  for (const auto& tx : revised.transactions()) {
    // Walk backwards keeping the max degree of the terms after the current one.
    double rest = 0.0;
    for (auto it = tx.entries.rbegin(); it != tx.entries.rend(); ++it) {
      lists[it->rank].append(tx.tid, it->degree, rest);
      rest = std::max(rest, it->degree);
    }
  }
  return lists;
}

FuzzyList construct(const FuzzyList& x, const FuzzyList& y) {
  const auto& xs = x.itemset();
  const auto& ys = y.itemset();
  if (xs.empty() || xs.size() != ys.size() ||
      !std::equal(xs.begin(), xs.end() - 1, ys.begin()) || !(xs.back() < ys.back()))
    throw std::invalid_argument("construct: lists must share a prefix and be ordered");

  std::vector<Rank> itemset = xs;
  itemset.push_back(ys.back());
  FuzzyList out(std::move(itemset));
  out.reserve(std::min(x.size(), y.size()));

  const auto& a = x.elements();
  const auto& b = y.elements();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].tid < b[j].tid) {
      ++i;
    } else if (b[j].tid < a[i].tid) {
      ++j;
    } else {
      out.append(a[i].tid, std::min(a[i].if_value, b[j].if_value), b[j].rf_value);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string dump_list(const FuzzyList& list, const RevisedDatabase& revised) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < list.itemset().size(); ++k) {
    if (k) os << ',';
    os << revised.name(list.itemset()[k]);
  }
  os << "] ->";
  for (const auto& e : list.elements())
    os << " (" << e.tid << ',' << format_number(e.if_value) << ',' << format_number(e.rf_value)
       << ')';
  os << " | " << format_number(list.sum_if()) << ' ' << format_number(list.sum_rf());
  return os.str();
}

}  // namespace frim
