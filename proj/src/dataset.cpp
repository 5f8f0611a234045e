#include "frim/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "frim/format.hpp"

namespace frim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_blanks(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto stop = s.find_first_of(" \t\r", start);
    if (stop == std::string_view::npos) stop = s.size();
    tokens.push_back(s.substr(start, stop - start));
    pos = stop;
  }
  return tokens;
}

std::optional<double> parse_real(std::string_view s) {
  double value = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

bool valid_item_name(std::string_view name) {
  return !name.empty() && name.find_first_of(": \t\r\n") == std::string_view::npos;
}

void open_for_reading(const std::filesystem::path& path, std::ifstream& in) {
  in.open(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "' for reading");
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

ItemId QuantitativeDatabase::intern(const std::string& name) {
  auto [it, inserted] = ids_.try_emplace(name, static_cast<ItemId>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

std::optional<ItemId> QuantitativeDatabase::find_item(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Tid QuantitativeDatabase::add_transaction(const Row& row) {
  if (row.empty()) throw ValidationError("transaction has no items");
  std::unordered_set<std::string_view> seen;
  for (const auto& [name, quantity] : row) {
    if (!valid_item_name(name)) throw ValidationError("invalid item name '" + name + "'");
    if (!std::isfinite(quantity) || quantity <= 0.0)
      throw ValidationError("quantity of '" + name + "' must be a finite positive number");
    if (!seen.insert(name).second) throw ValidationError("duplicate item '" + name + "'");
  }
  QuantitativeTransaction tx{static_cast<Tid>(transactions_.size() + 1), {}};
  tx.entries.reserve(row.size());
  for (const auto& [name, quantity] : row) tx.entries.push_back({intern(name), quantity});
  transactions_.push_back(std::move(tx));
  return transactions_.back().tid;
}

QuantitativeDatabase parse_database(std::istream& in) {
  QuantitativeDatabase db;
  std::string line;
  std::size_t line_no = 0;
  QuantitativeDatabase::Row row;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    row.clear();
    for (auto token : split_blanks(body)) {
      const auto colon = token.find(':');
      if (colon == std::string_view::npos || colon == 0 || colon + 1 == token.size() ||
          token.find(':', colon + 1) != std::string_view::npos)
        throw ParseError(line_no, "malformed token '" + std::string(token) +
                                      "', expected item:quantity");
      const auto quantity = parse_real(token.substr(colon + 1));
      if (!quantity)
        throw ParseError(line_no, "malformed quantity in '" + std::string(token) + "'");
      row.emplace_back(std::string(token.substr(0, colon)), *quantity);
    }
    try {
      db.add_transaction(row);
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (in.bad()) throw ParseError(0, "read error");
  if (db.empty()) throw ParseError(0, "empty database: no transactions found");
  return db;
}

QuantitativeDatabase parse_database_file(const std::filesystem::path& path) {
  std::ifstream in;
  open_for_reading(path, in);
  try {
    return parse_database(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

void write_database(std::ostream& out, const QuantitativeDatabase& db) {
  for (const auto& tx : db.transactions()) {
    bool first = true;
    for (const auto& e : tx.entries) {
      if (!first) out << ' ';
      first = false;
      out << db.item_name(e.item) << ':' << format_number(e.quantity);
    }
    out << '\n';
  }
}

MembershipFunctionConfig::MembershipFunctionConfig(std::vector<MembershipTerm> terms)
    : terms_(std::move(terms)) {
  if (terms_.size() < 2) throw ValidationError("membership config needs at least 2 terms");
  std::unordered_set<std::string_view> labels;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (!valid_item_name(t.label) || t.label.find('.') != std::string::npos)
      throw ValidationError("invalid term label '" + t.label + "'");
    if (!labels.insert(t.label).second)
      throw ValidationError("duplicate term label '" + t.label + "'");
    if (!std::isfinite(t.peak)) throw ValidationError("peak of '" + t.label + "' is not finite");
    if (i > 0 && !(t.peak > terms_[i - 1].peak))
      throw ValidationError("peaks must be strictly increasing ('" + terms_[i - 1].label +
                            "' then '" + t.label + "')");
  }
}

MembershipFunctionConfig MembershipFunctionConfig::default_config() {
  return MembershipFunctionConfig({{"L", 1.0}, {"M", 6.0}, {"H", 11.0}});
}

MembershipFunctionConfig parse_membership_config(std::istream& in) {
  std::vector<MembershipTerm> terms;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split_blanks(body);
    if (tokens.size() != 3 || tokens[0] != "term")
      throw ParseError(line_no, "expected 'term <label> <peak>'");
    const auto peak = parse_real(tokens[2]);
    if (!peak) throw ParseError(line_no, "malformed peak '" + std::string(tokens[2]) + "'");
    terms.push_back({std::string(tokens[1]), *peak});
  }
  try {
    return MembershipFunctionConfig(std::move(terms));
  } catch (const ValidationError& e) {
    throw ParseError(0, e.what());
  }
}

MembershipFunctionConfig parse_membership_config_file(const std::filesystem::path& path) {
  std::ifstream in;
  open_for_reading(path, in);
  try {
    return parse_membership_config(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

void write_membership_config(std::ostream& out, const MembershipFunctionConfig& config) {
  for (const auto& t : config.terms()) out << "term " << t.label << ' ' << format_number(t.peak) << '\n';
}

DatabaseStats database_stats(const QuantitativeDatabase& db) {
  DatabaseStats s;
  s.transactions = db.size();
  s.distinct_items = db.item_count();
  for (const auto& tx : db.transactions()) {
    s.total_entries += tx.entries.size();
    for (const auto& e : tx.entries) s.max_quantity = std::max(s.max_quantity, e.quantity);
  }
  if (s.transactions > 0)
    s.average_length = static_cast<double>(s.total_entries) / static_cast<double>(s.transactions);
  return s;
}

}  // namespace frim
