#include "frim/fuzzifier.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#ifdef FRIM_HAVE_OPENMP
#include <omp.h>
#endif

namespace frim {

std::vector<Membership> fuzzify_value(double quantity, const MembershipFunctionConfig& config) {
  if (!std::isfinite(quantity) || quantity <= 0.0)
    throw ValidationError("cannot fuzzify a non-positive or non-finite quantity");
  const auto& terms = config.terms();
  const auto last = terms.size() - 1;
  if (quantity <= terms.front().peak) return {{0, 1.0}};
  if (quantity >= terms.back().peak) return {{static_cast<TermIndex>(last), 1.0}};

  // First peak strictly above the quantity; the quantity sits in [lo, hi).
  const auto upper = std::upper_bound(terms.begin(), terms.end(), quantity,
                                      [](double q, const MembershipTerm& t) { return q < t.peak; });
  const auto hi = static_cast<TermIndex>(upper - terms.begin());
  const auto lo = static_cast<TermIndex>(hi - 1);
  const double width = terms[hi].peak - terms[lo].peak;
  const double lo_degree = (terms[hi].peak - quantity) / width;
  const double hi_degree = (quantity - terms[lo].peak) / width;

  std::vector<Membership> out;
  out.reserve(2);
  if (lo_degree > 0.0) out.push_back({lo, lo_degree});
  if (hi_degree > 0.0) out.push_back({hi, hi_degree});
  return out;
}

std::vector<FuzzyTransaction> transform_database(const QuantitativeDatabase& db,
                                                 const MembershipFunctionConfig& config,
                                                 int threads) {
  const auto& txs = db.transactions();
  std::vector<FuzzyTransaction> out(txs.size());
  const auto n = static_cast<std::ptrdiff_t>(txs.size());
#ifdef FRIM_HAVE_OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(team) if (team > 1)
#else
  (void)threads;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& tx = txs[static_cast<std::size_t>(i)];
    auto& ftx = out[static_cast<std::size_t>(i)];
    ftx.tid = tx.tid;
    ftx.memberships.reserve(tx.entries.size() * 2);
    for (const auto& e : tx.entries)
      for (const auto& m : fuzzify_value(e.quantity, config))
        ftx.memberships.push_back({{e.item, m.term}, m.degree});
  }
  return out;
}

TermSupportMap term_supports(std::span<const FuzzyTransaction> transactions) {
  // Dense accumulation first; summation order per term is transaction order,
  // the same as term_support().
  std::size_t items = 0;
  std::size_t terms = 0;
  for (const auto& tx : transactions)
    for (const auto& m : tx.memberships) {
      items = std::max<std::size_t>(items, m.term.item + 1);
      terms = std::max<std::size_t>(terms, m.term.term + 1);
    }
  std::vector<double> sums(items * terms, 0.0);
  std::vector<char> seen(items * terms, 0);
  for (const auto& tx : transactions)
    for (const auto& m : tx.memberships) {
      const auto slot = m.term.item * terms + m.term.term;
      sums[slot] += m.degree;
      seen[slot] = 1;
    }
  TermSupportMap out;
  for (std::size_t slot = 0; slot < sums.size(); ++slot)
    if (seen[slot])
      out.emplace_hint(out.end(),
                       FuzzyTerm{static_cast<ItemId>(slot / terms), static_cast<TermIndex>(slot % terms)},
                       sums[slot]);
  return out;
}

double term_support(FuzzyTerm term, std::span<const FuzzyTransaction> transactions) {
  double sum = 0.0;
  for (const auto& tx : transactions)
    for (const auto& m : tx.memberships)
      if (m.term == term) sum += m.degree;
  return sum;
}

std::map<ItemId, ChosenTerm> select_max_cardinality(const TermSupportMap& supports) {
  std::map<ItemId, ChosenTerm> chosen;
  // Ascending (item, term) iteration: only a strictly larger support replaces
  // the incumbent, so ties keep the lowest term index.
  for (const auto& [term, support] : supports) {
    auto [it, inserted] = chosen.try_emplace(term.item, ChosenTerm{term, support});
    if (!inserted && support > it->second.support) it->second = {term, support};
  }
  return chosen;
}

RevisedDatabase::RevisedDatabase(std::vector<RetainedTerm> terms,
                                 std::vector<RevisedTransaction> transactions,
                                 std::size_t original_size)
    : terms_(std::move(terms)), transactions_(std::move(transactions)), original_size_(original_size) {
  for (std::size_t r = 0; r < terms_.size(); ++r) ranks_.emplace(terms_[r].term, static_cast<Rank>(r));
}

std::optional<Rank> RevisedDatabase::rank_of(FuzzyTerm term) const {
  auto it = ranks_.find(term);
  if (it == ranks_.end()) return std::nullopt;
  return it->second;
}

std::optional<Rank> RevisedDatabase::rank_of(std::string_view name) const {
  for (std::size_t r = 0; r < terms_.size(); ++r)
    if (terms_[r].name == name) return static_cast<Rank>(r);
  return std::nullopt;
}

std::string term_name(FuzzyTerm term, const QuantitativeDatabase& db,
                      const MembershipFunctionConfig& config) {
  return db.item_name(term.item) + "." + config.label(term.term);
}

RevisedDatabase build_revised_database(const QuantitativeDatabase& db,
                                       const MembershipFunctionConfig& config,
                                       std::span<const FuzzyTransaction> transactions,
                                       const std::map<ItemId, ChosenTerm>& chosen,
                                       double min_rare_abs) {
  if (!(min_rare_abs >= 0.0)) throw ValidationError("minimum rare support must be non-negative");

  std::vector<RetainedTerm> retained;
  for (const auto& [item, c] : chosen)
    if (c.support >= min_rare_abs - kSupportEpsilon)
      retained.push_back({c.term, term_name(c.term, db, config), c.support});

  // Supports are compared on the 1e-9 grid so that accumulation noise cannot
  // split a tie; ties fall back to (item name, label).
  const auto key = [&](const RetainedTerm& t) {
    return std::make_tuple(std::llround(t.support * 1e9), std::cref(db.item_name(t.term.item)),
                           std::cref(config.label(t.term.term)));
  };
  std::sort(retained.begin(), retained.end(),
            [&](const RetainedTerm& a, const RetainedTerm& b) { return key(a) < key(b); });

  constexpr Rank kNone = static_cast<Rank>(-1);
  std::vector<Rank> rank_of_item(db.item_count(), kNone);
  std::vector<TermIndex> term_of_item(db.item_count(), 0);
  for (std::size_t r = 0; r < retained.size(); ++r) {
    rank_of_item.at(retained[r].term.item) = static_cast<Rank>(r);
    term_of_item.at(retained[r].term.item) = retained[r].term.term;
  }

  std::vector<RevisedTransaction> revised;
  revised.reserve(transactions.size());
  for (const auto& tx : transactions) {
    RevisedTransaction rtx{tx.tid, {}};
    for (const auto& m : tx.memberships) {
      const auto item = m.term.item;
      if (item < rank_of_item.size() && rank_of_item[item] != kNone &&
          term_of_item[item] == m.term.term && m.degree > 0.0)
        rtx.entries.push_back({rank_of_item[item], m.degree});
    }
    std::sort(rtx.entries.begin(), rtx.entries.end(),
              [](const RevisedEntry& a, const RevisedEntry& b) { return a.rank < b.rank; });
    revised.push_back(std::move(rtx));
  }
  return RevisedDatabase(std::move(retained), std::move(revised), db.size());
}

FuzzificationResult fuzzify_database(const QuantitativeDatabase& db,
                                     const MembershipFunctionConfig& config, double min_rare_abs,
                                     int threads) {
  FuzzificationResult fz;
  fz.transformed = transform_database(db, config, threads);
  fz.supports = term_supports(fz.transformed);
  fz.chosen = select_max_cardinality(fz.supports);
  fz.revised = build_revised_database(db, config, fz.transformed, fz.chosen, min_rare_abs);
  return fz;
}

}  // namespace frim
