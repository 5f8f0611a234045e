#include "frim/miner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#ifdef FRIM_HAVE_OPENMP
#include <omp.h>
#endif

namespace frim {

Thresholds resolve_thresholds(const MiningParams& params, std::size_t n) {
  if (n == 0) throw ValidationError("cannot resolve thresholds for an empty database");
  if (!std::isfinite(params.min_rare) || params.min_rare < 0.0)
    throw ValidationError("minimum rare support must be a finite non-negative number");
  if (std::isnan(params.max_freq) || params.max_freq < 0.0)
    throw ValidationError("maximum frequent support must be a non-negative number");
  Thresholds t{params.min_rare, params.max_freq};
  if (params.mode == ThresholdMode::relative) {
    t.min_rare_abs *= static_cast<double>(n);
    t.max_freq_abs *= static_cast<double>(n);
  }
  if (t.min_rare_abs > t.max_freq_abs)
    throw ValidationError("threshold inversion: minimum rare support exceeds maximum frequent support");
  return t;
}

std::string_view to_string(ItemsetKind kind) {
  switch (kind) {
    case ItemsetKind::rare_only:
      return "rare-only";
    case ItemsetKind::mixed:
      return "mixed";
    case ItemsetKind::frequent_only:
      return "frequent-only";
  }
  return "unknown";
}

std::vector<TermBand> term_bands(const RevisedDatabase& revised, const Thresholds& thresholds) {
  std::vector<TermBand> bands;
  bands.reserve(revised.terms().size());
  for (const auto& t : revised.terms())
    bands.push_back(below_max_freq(t.support, thresholds.max_freq_abs) ? TermBand::rare
                                                                       : TermBand::frequent);
  return bands;
}

ItemsetKind classify_itemset(std::span<const Rank> itemset, std::span<const TermBand> bands) {
  if (itemset.empty()) throw std::invalid_argument("cannot classify an empty itemset");
  bool any_rare = false;
  bool any_frequent = false;
  for (const Rank r : itemset) {
    if (r >= bands.size()) throw std::out_of_range("term rank " + std::to_string(r) + " has no band");
    (bands[r] == TermBand::rare ? any_rare : any_frequent) = true;
  }
  if (any_rare && any_frequent) return ItemsetKind::mixed;
  return any_rare ? ItemsetKind::rare_only : ItemsetKind::frequent_only;
}

bool canonical_less(const FuzzyRareItemset& a, const FuzzyRareItemset& b) {
  if (a.ranks.size() != b.ranks.size()) return a.ranks.size() < b.ranks.size();
  return a.ranks < b.ranks;
}

void sort_canonical(std::vector<FuzzyRareItemset>& fris) {
  std::sort(fris.begin(), fris.end(), canonical_less);
}

namespace {

struct Search {
  const Thresholds& thresholds;
  const MinerOptions& options;
  std::span<const TermBand> bands;
  std::vector<FuzzyRareItemset> fris;
  MiningStats stats;
  std::uint64_t live = 0;

  bool should_extend(const FuzzyList& x) const {
    switch (options.pruning) {
      case PruningRule::combined:
        return reaches_min_rare(std::min(x.sum_if(), x.sum_rf()), thresholds.min_rare_abs);
      case PruningRule::resting_only:
        return reaches_min_rare(x.sum_rf(), thresholds.min_rare_abs);
      case PruningRule::exhaustive:
        return true;
    }
    return true;
  }

  // A sibling below the rare threshold cannot yield a rare extension, since
  // adding X's terms only lowers support.
  bool usable_partner(const FuzzyList& y) const {
    if (y.empty()) return false;
    return options.pruning == PruningRule::exhaustive ||
           reaches_min_rare(y.sum_if(), thresholds.min_rare_abs);
  }

  void visit(const std::vector<FuzzyList>& level, std::size_t i) {
    const auto& x = level[i];
    if (x.empty()) return;
    if (reaches_min_rare(x.sum_if(), thresholds.min_rare_abs)) {
      ++stats.candidates;
      if (below_max_freq(x.sum_if(), thresholds.max_freq_abs))
        fris.push_back({x.itemset(), x.sum_if(), classify_itemset(x.itemset(), bands)});
    }
    if (i + 1 == level.size()) return;
    if (!should_extend(x)) {
      ++stats.joins_pruned;
      return;
    }

    std::vector<FuzzyList> children;
    std::uint64_t child_elements = 0;
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      const auto& y = level[j];
      if (!usable_partner(y)) continue;
      children.push_back(construct(x, y));
      ++stats.lists_constructed;
      child_elements += children.back().size();
      if (options.on_join) options.on_join(x, y, children.back());
    }
    live += child_elements;
    stats.peak_list_elements = std::max(stats.peak_list_elements, live);
    for (std::size_t k = 0; k < children.size(); ++k) visit(children, k);
    live -= child_elements;
  }
};

std::uint64_t element_count(const std::vector<FuzzyList>& lists) {
  std::uint64_t n = 0;
  for (const auto& l : lists) n += l.size();
  return n;
}

[[maybe_unused]] void merge_stats(MiningStats& into, const MiningStats& from) {
  into.candidates += from.candidates;
  into.lists_constructed += from.lists_constructed;
  into.joins_pruned += from.joins_pruned;
  into.peak_list_elements += from.peak_list_elements;
}

}  // namespace

MiningResult mine_revised(const RevisedDatabase& revised, const Thresholds& thresholds,
                          const MinerOptions& options) {
  if (thresholds.min_rare_abs < 0.0 || thresholds.min_rare_abs > thresholds.max_freq_abs)
    throw ValidationError("threshold inversion: minimum rare support exceeds maximum frequent support");

  const auto start = std::chrono::steady_clock::now();
  MiningResult result;
  result.terms = revised.terms();
  result.thresholds = thresholds;
  result.transactions = revised.original_size();

  const auto bands = term_bands(revised, thresholds);
  const auto roots = build_initial_lists(revised);
  const std::uint64_t root_elements = element_count(roots);

#ifdef FRIM_HAVE_OPENMP
  const int team = options.threads > 0 ? options.threads : omp_get_max_threads();
#else
  const int team = 1;
#endif

  if (team <= 1) {
    Search search{thresholds, options, bands, {}, {}, root_elements};
    search.stats.peak_list_elements = root_elements;
    for (std::size_t i = 0; i < roots.size(); ++i) search.visit(roots, i);
    result.fris = std::move(search.fris);
    result.stats = search.stats;
  } else {
#ifdef FRIM_HAVE_OPENMP
    // Each root's subtree is independent; threads keep private outputs and
    // stats that are merged afterwards. The memory estimate becomes the sum
    // of per-thread high-water marks on top of the root lists.
    std::vector<Search> searches;
    searches.reserve(static_cast<std::size_t>(team));
    for (int t = 0; t < team; ++t) searches.push_back(Search{thresholds, options, bands, {}, {}, 0});
    const auto n = static_cast<std::ptrdiff_t>(roots.size());
#pragma omp parallel num_threads(team)
    {
      auto& search = searches[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
      for (std::ptrdiff_t i = 0; i < n; ++i) search.visit(roots, static_cast<std::size_t>(i));
    }
    result.stats.peak_list_elements = root_elements;
    for (auto& s : searches) {
      merge_stats(result.stats, s.stats);
      result.fris.insert(result.fris.end(), std::make_move_iterator(s.fris.begin()),
                         std::make_move_iterator(s.fris.end()));
    }
#endif
  }

  sort_canonical(result.fris);
  result.stats.peak_memory_bytes = result.stats.peak_list_elements * sizeof(FuzzyListElement);
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

MiningResult mine(const QuantitativeDatabase& db, const MembershipFunctionConfig& config,
                  const MiningParams& params, const MinerOptions& options) {
  const auto thresholds = resolve_thresholds(params, db.size());
  const auto fz = fuzzify_database(db, config, thresholds.min_rare_abs, options.threads);
  return mine_revised(fz.revised, thresholds, options);
}

}  // namespace frim
