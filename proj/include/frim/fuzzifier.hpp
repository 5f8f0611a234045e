#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frim/dataset.hpp"

namespace frim {

using TermIndex = std::uint16_t;
using Rank = std::uint32_t;

/// Tolerance applied to every support-versus-threshold comparison.
inline constexpr double kSupportEpsilon = 1e-9;

/// A linguistic term of one item variable, e.g. B.M.
struct FuzzyTerm {
  ItemId item;
  TermIndex term;

  auto operator<=>(const FuzzyTerm&) const = default;
};

struct Membership {
  TermIndex term;
  double degree;
};

/// Triangular membership degrees of `quantity`, ascending by term index,
/// zero degrees omitted. At most two adjacent terms are returned and the
/// degrees sum to one. Quantities at or below the first peak map fully to the
/// first term; at or above the last peak, fully to the last term.
/// Throws ValidationError for non-positive or non-finite quantities.
std::vector<Membership> fuzzify_value(double quantity, const MembershipFunctionConfig& config);

struct FuzzyEntry {
  FuzzyTerm term;
  double degree;
};

struct FuzzyTransaction {
  Tid tid;
  std::vector<FuzzyEntry> memberships;  // item file order, then term index
};

/// Expands every (item, quantity) of every transaction. With `threads` > 1
/// and OpenMP available the transactions are fuzzified in parallel; the
/// output is identical to the serial pass.
std::vector<FuzzyTransaction> transform_database(const QuantitativeDatabase& db,
                                                 const MembershipFunctionConfig& config,
                                                 int threads = 1);

using TermSupportMap = std::map<FuzzyTerm, double>;

/// Scalar cardinality of every term that occurs, accumulated transaction by
/// transaction.
TermSupportMap term_supports(std::span<const FuzzyTransaction> transactions);

/// Scalar cardinality of a single term by a dedicated scan.
double term_support(FuzzyTerm term, std::span<const FuzzyTransaction> transactions);

struct ChosenTerm {
  FuzzyTerm term;
  double support;
};

/// For each item variable, its term of greatest support. Ties go to the lowest
/// term index.
std::map<ItemId, ChosenTerm> select_max_cardinality(const TermSupportMap& supports);

struct RetainedTerm {
  FuzzyTerm term;
  std::string name;  // "<item>.<label>"
  double support;
};

struct RevisedEntry {
  Rank rank;
  double degree;
};

struct RevisedTransaction {
  Tid tid;
  std::vector<RevisedEntry> entries;  // ascending rank; may be empty
};

/// Transactions restricted to the retained terms, each term identified by its
/// rank in the support-ascending global order.
class RevisedDatabase {
 public:
  RevisedDatabase() = default;
  RevisedDatabase(std::vector<RetainedTerm> terms, std::vector<RevisedTransaction> transactions,
                  std::size_t original_size);

  /// Retained terms indexed by rank.
  const std::vector<RetainedTerm>& terms() const noexcept { return terms_; }
  const std::vector<RevisedTransaction>& transactions() const noexcept { return transactions_; }
  std::size_t original_size() const noexcept { return original_size_; }
  bool empty() const noexcept { return terms_.empty(); }

  std::optional<Rank> rank_of(FuzzyTerm term) const;
  std::optional<Rank> rank_of(std::string_view name) const;
  const std::string& name(Rank rank) const { return terms_.at(rank).name; }

 private:
  std::vector<RetainedTerm> terms_;
  std::vector<RevisedTransaction> transactions_;
  std::map<FuzzyTerm, Rank> ranks_;
  std::size_t original_size_ = 0;
};

std::string term_name(FuzzyTerm term, const QuantitativeDatabase& db,
                      const MembershipFunctionConfig& config);

/// Keeps, per transaction, the chosen term of each item whose global support
/// reaches `min_rare_abs` (within kSupportEpsilon) and orders terms by
/// ascending support, ties broken by (item name, label).
RevisedDatabase build_revised_database(const QuantitativeDatabase& db,
                                       const MembershipFunctionConfig& config,
                                       std::span<const FuzzyTransaction> transactions,
                                       const std::map<ItemId, ChosenTerm>& chosen,
                                       double min_rare_abs);

/// Every intermediate product of the fuzzification phase.
struct FuzzificationResult {
  std::vector<FuzzyTransaction> transformed;
  TermSupportMap supports;
  std::map<ItemId, ChosenTerm> chosen;
  RevisedDatabase revised;
};

FuzzificationResult fuzzify_database(const QuantitativeDatabase& db,
                                     const MembershipFunctionConfig& config, double min_rare_abs,
                                     int threads = 1);

}  // namespace frim
