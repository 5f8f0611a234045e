#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace frim {

using ItemId = std::uint32_t;
using Tid = std::uint32_t;

/// Input text that could not be parsed. `line()` is 1-based; 0 means the
/// error concerns the stream as a whole (e.g. an empty database).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A semantically invalid request (threshold inversion, bad config, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuantityEntry {
  ItemId item;
  double quantity;
};

struct QuantitativeTransaction {
  Tid tid;
  std::vector<QuantityEntry> entries;  // file order
};

/// Transactions of (item, quantity) pairs. Item names are interned in order
/// of first appearance; tids run 1..n in insertion order.
class QuantitativeDatabase {
 public:
  using Row = std::vector<std::pair<std::string, double>>;

  /// Appends a transaction and returns its tid. Throws ValidationError on an
  /// empty row, a non-positive or non-finite quantity, a duplicate item or an
  /// item name containing ':' or whitespace.
  Tid add_transaction(const Row& row);

  const std::vector<QuantitativeTransaction>& transactions() const noexcept {
    return transactions_;
  }
  std::size_t size() const noexcept { return transactions_.size(); }
  bool empty() const noexcept { return transactions_.empty(); }

  std::size_t item_count() const noexcept { return names_.size(); }
  const std::string& item_name(ItemId id) const { return names_.at(id); }
  std::optional<ItemId> find_item(std::string_view name) const;

 private:
  ItemId intern(const std::string& name);

  std::vector<QuantitativeTransaction> transactions_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, ItemId> ids_;
};

/// One transaction per non-comment, non-blank line; tokens are
/// `item:quantity` separated by spaces or tabs. Lines whose first
/// non-blank character is '#' are comments. CRLF endings are accepted.
QuantitativeDatabase parse_database(std::istream& in);
QuantitativeDatabase parse_database_file(const std::filesystem::path& path);

/// Writes the database back in the format `parse_database` reads.
void write_database(std::ostream& out, const QuantitativeDatabase& db);

struct MembershipTerm {
  std::string label;
  double peak;
};

/// Ordered linguistic terms with strictly increasing peaks. Adjacent peaks
/// span triangular membership functions.
class MembershipFunctionConfig {
 public:
  /// Throws ValidationError when there are fewer than two terms, a label is
  /// duplicated or empty, or peaks are not strictly increasing and finite.
  explicit MembershipFunctionConfig(std::vector<MembershipTerm> terms);

  /// Low/Middle/High with peaks 1, 6 and 11.
  static MembershipFunctionConfig default_config();

  const std::vector<MembershipTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::string& label(std::size_t index) const { return terms_.at(index).label; }
  double peak(std::size_t index) const { return terms_.at(index).peak; }

 private:
  std::vector<MembershipTerm> terms_;
};

/// Lines of the form `term <label> <peak>`; '#' comments and blank lines are
/// ignored.
MembershipFunctionConfig parse_membership_config(std::istream& in);
MembershipFunctionConfig parse_membership_config_file(const std::filesystem::path& path);
void write_membership_config(std::ostream& out, const MembershipFunctionConfig& config);

struct DatabaseStats {
  std::size_t transactions = 0;
  std::size_t distinct_items = 0;
  std::size_t total_entries = 0;
  double average_length = 0.0;
  double max_quantity = 0.0;
};

DatabaseStats database_stats(const QuantitativeDatabase& db);

}  // namespace frim
