#include "frim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "frim/format.hpp"

namespace frim {

namespace {

// Degree of each retained term in each transaction, zero when absent.
std::vector<std::vector<double>> dense_degrees(const RevisedDatabase& revised) {
  std::vector<std::vector<double>> rows;
  rows.reserve(revised.transactions().size());
  for (const auto& tx : revised.transactions()) {
    std::vector<double> row(revised.terms().size(), 0.0);
    for (const auto& e : tx.entries) row.at(e.rank) = e.degree;
    rows.push_back(std::move(row));
  }
  return rows;
}

double support_on(std::span<const Rank> itemset, const std::vector<std::vector<double>>& rows) {
  double sum = 0.0;
  for (const auto& row : rows) {
    double m = 1.0;
    for (const Rank r : itemset) m = std::min(m, row[r]);
    if (m > 0.0) sum += m;
  }
  return sum;
}

// Advances `c` to the next k-combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<Rank>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::string render(const std::vector<Rank>& ranks, const RevisedDatabase& revised) {
  std::string s = "{";
  for (std::size_t k = 0; k < ranks.size(); ++k) {
    if (k) s += ',';
    s += revised.name(ranks[k]);
  }
  return s + "}";
}

}  // namespace

double brute_force_support(std::span<const Rank> itemset, const RevisedDatabase& revised) {
  for (const Rank r : itemset)
    if (r >= revised.terms().size())
      throw std::out_of_range("term rank " + std::to_string(r) + " is not retained");
  double sum = 0.0;
  for (const auto& tx : revised.transactions()) {
    double m = 1.0;
    for (const Rank r : itemset) {
      const auto it = std::find_if(tx.entries.begin(), tx.entries.end(),
                                   [r](const RevisedEntry& e) { return e.rank == r; });
      m = it == tx.entries.end() ? 0.0 : std::min(m, it->degree);
    }
    if (!itemset.empty() && m > 0.0) sum += m;
  }
  return sum;
}

double brute_force_support(std::span<const FuzzyTerm> itemset, const RevisedDatabase& revised) {
  std::vector<Rank> ranks;
  for (const auto& t : itemset) {
    const auto r = revised.rank_of(t);
    if (!r) throw std::out_of_range("term is not retained in the revised database");
    ranks.push_back(*r);
  }
  return brute_force_support(std::span<const Rank>(ranks), revised);
}

OracleResult brute_force_mine(const RevisedDatabase& revised, const Thresholds& thresholds,
                              std::size_t cap) {
  const std::size_t n = revised.terms().size();
  if (n > cap)
    throw ValidationError("oracle cap exceeded: " + std::to_string(n) + " retained terms > " +
                          std::to_string(cap));
  const auto rows = dense_degrees(revised);

  std::vector<TermBand> bands;
  for (Rank r = 0; r < n; ++r) {
    const Rank single[] = {r};
    bands.push_back(support_on(single, rows) < thresholds.max_freq_abs - kSupportEpsilon
                        ? TermBand::rare
                        : TermBand::frequent);
  }

  OracleResult out;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rank> combo(k);
    std::iota(combo.begin(), combo.end(), Rank{0});
    do {
      std::set<ItemId> variables;
      for (const Rank r : combo) variables.insert(revised.terms()[r].term.item);
      if (variables.size() != combo.size()) continue;

      const double s = support_on(combo, rows);
      if (!(s > 0.0)) continue;
      out.supports.emplace(combo, s);
      if (s >= thresholds.min_rare_abs - kSupportEpsilon &&
          s < thresholds.max_freq_abs - kSupportEpsilon) {
        bool rare = false;
        bool frequent = false;
        for (const Rank r : combo) (bands[r] == TermBand::rare ? rare : frequent) = true;
        const auto kind = rare && frequent ? ItemsetKind::mixed
                          : rare           ? ItemsetKind::rare_only
                                           : ItemsetKind::frequent_only;
        out.fris.push_back({combo, s, kind});
      }
    } while (next_combination(combo, n));
  }
  return out;
}

ResultDiff diff_fris(std::span<const FuzzyRareItemset> expected,
                     std::span<const FuzzyRareItemset> actual, const RevisedDatabase& revised,
                     double tolerance) {
  ResultDiff diff;
  const auto line = [&](char sign, const FuzzyRareItemset& f) {
    diff.lines.push_back(std::string(1, sign) + render(f.ranks, revised) + " " +
                         format_number(f.support) + " " + std::string(to_string(f.kind)));
  };
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < expected.size() || j < actual.size()) {
    if (j == actual.size() || (i < expected.size() && canonical_less(expected[i], actual[j]))) {
      line('-', expected[i++]);
    } else if (i == expected.size() || canonical_less(actual[j], expected[i])) {
      line('+', actual[j++]);
    } else {
      const auto& e = expected[i++];
      const auto& a = actual[j++];
      if (std::abs(e.support - a.support) > tolerance || e.kind != a.kind) {
        line('-', e);
        line('+', a);
      }
    }
  }
  diff.equal = diff.lines.empty();
  return diff;
}

}  // namespace frim
