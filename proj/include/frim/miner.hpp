#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "frim/dataset.hpp"
#include "frim/fuzzifier.hpp"
#include "frim/fuzzy_list.hpp"

namespace frim {

enum class ThresholdMode { relative, absolute };

/// Lower (rare) and upper (frequent) support thresholds, either as fractions
/// of |D| or as absolute fuzzy supports.
struct MiningParams {
  double min_rare = 0.25;
  double max_freq = 0.50;
  ThresholdMode mode = ThresholdMode::relative;
};

struct Thresholds {
  double min_rare_abs;
  double max_freq_abs;
};

/// Throws ValidationError on negative or non-finite thresholds, n == 0, or
/// min_rare above max_freq ("threshold inversion").
Thresholds resolve_thresholds(const MiningParams& params, std::size_t n);

/// support >= threshold - eps
constexpr bool reaches_min_rare(double support, double min_rare_abs) {
  return support >= min_rare_abs - kSupportEpsilon;
}
/// support < threshold - eps; a support equal to the ceiling counts as frequent.
constexpr bool below_max_freq(double support, double max_freq_abs) {
  return support < max_freq_abs - kSupportEpsilon;
}

enum class ItemsetKind : std::uint8_t { rare_only, mixed, frequent_only };
enum class TermBand : std::uint8_t { rare, frequent };

std::string_view to_string(ItemsetKind kind);

/// Band of every retained term (by rank) from its 1-item support.
std::vector<TermBand> term_bands(const RevisedDatabase& revised, const Thresholds& thresholds);

/// Throws std::out_of_range if a rank has no band.
ItemsetKind classify_itemset(std::span<const Rank> itemset, std::span<const TermBand> bands);

struct FuzzyRareItemset {
  std::vector<Rank> ranks;  // ascending
  double support;
  ItemsetKind kind;
};

/// Size first, then lexicographic on ranks.
bool canonical_less(const FuzzyRareItemset& a, const FuzzyRareItemset& b);
void sort_canonical(std::vector<FuzzyRareItemset>& fris);

enum class PruningRule {
  /// Extend X only if min(SUM(X.if), SUM(X.rf)) reaches the rare threshold.
  combined,
  /// Extend X whenever SUM(X.rf) reaches the rare threshold.
  resting_only,
  /// Join every non-empty list with every later sibling.
  exhaustive,
};

using JoinObserver =
    std::function<void(const FuzzyList& x, const FuzzyList& y, const FuzzyList& joined)>;

struct MinerOptions {
  PruningRule pruning = PruningRule::combined;
  /// 1 runs the serial reference path. Larger values split the top level of
  /// the enumeration tree across OpenMP threads; 0 uses the OpenMP default.
  int threads = 1;
  /// Called after every join. Invoked concurrently when threads != 1.
  JoinObserver on_join;
};

struct MiningStats {
  std::uint64_t candidates = 0;          // nodes whose support reaches the rare threshold
  std::uint64_t lists_constructed = 0;   // construct() calls
  std::uint64_t joins_pruned = 0;        // nodes with later siblings left unextended
  std::uint64_t peak_list_elements = 0;  // high-water mark of live list elements
  std::uint64_t peak_memory_bytes = 0;   // peak_list_elements * sizeof(FuzzyListElement)
  double elapsed_ms = 0.0;
};

struct MiningResult {
  std::vector<RetainedTerm> terms;  // by rank
  Thresholds thresholds{};
  std::size_t transactions = 0;
  std::vector<FuzzyRareItemset> fris;  // canonical order
  MiningStats stats;
};

/// Enumerates the fuzzy rare itemsets of an already revised database.
MiningResult mine_revised(const RevisedDatabase& revised, const Thresholds& thresholds,
                          const MinerOptions& options = {});

/// Fuzzifies, revises and mines in one call.
MiningResult mine(const QuantitativeDatabase& db, const MembershipFunctionConfig& config,
                  const MiningParams& params, const MinerOptions& options = {});

}  // namespace frim
