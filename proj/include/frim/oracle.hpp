#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "frim/fuzzifier.hpp"
#include "frim/miner.hpp"

namespace frim {

/// Reference support: sum over transactions containing every term of the
/// minimum degree among them. Throws std::out_of_range for an unknown rank.
double brute_force_support(std::span<const Rank> itemset, const RevisedDatabase& revised);

/// Same, addressing terms by identity. Throws std::out_of_range if a term is
/// not retained.
double brute_force_support(std::span<const FuzzyTerm> itemset, const RevisedDatabase& revised);

struct OracleResult {
  std::map<std::vector<Rank>, double> supports;  // every subset with positive support
  std::vector<FuzzyRareItemset> fris;            // canonical order
};

inline constexpr std::size_t kDefaultOracleCap = 20;

/// Enumerates all subsets of the retained terms. Throws ValidationError when
/// more than `cap` terms are retained.
OracleResult brute_force_mine(const RevisedDatabase& revised, const Thresholds& thresholds,
                              std::size_t cap = kDefaultOracleCap);

struct ResultDiff {
  bool equal = true;
  std::vector<std::string> lines;  // "-" expected only, "+" actual only
};

/// Compares two canonical FRI lists; supports must agree within `tolerance`
/// and kinds exactly.
ResultDiff diff_fris(std::span<const FuzzyRareItemset> expected,
                     std::span<const FuzzyRareItemset> actual, const RevisedDatabase& revised,
                     double tolerance = 1e-9);

}  // namespace frim
