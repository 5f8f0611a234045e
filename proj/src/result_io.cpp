#include "frim/result_io.hpp"

#include <cmath>
#include <ostream>

#include <json.hpp>

#include "frim/format.hpp"

namespace frim {

namespace {

using nlohmann::ordered_json;

std::string joined_terms(const FuzzyRareItemset& fri, const MiningResult& result, char sep) {
  std::string s;
  for (std::size_t k = 0; k < fri.ranks.size(); ++k) {
    if (k) s += sep;
    s += result.terms.at(fri.ranks[k]).name;
  }
  return s;
}

ordered_json stats_json(const MiningStats& s) {
  return {{"candidates", s.candidates},
          {"lists_constructed", s.lists_constructed},
          {"joins_pruned", s.joins_pruned},
          {"peak_list_elements", s.peak_list_elements},
          {"peak_memory_bytes", s.peak_memory_bytes},
          {"elapsed_ms", s.elapsed_ms}};
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ValidationError("unknown format '" + std::string(name) + "' (expected text, csv or json)");
}

std::string itemset_label(const FuzzyRareItemset& fri, const MiningResult& result) {
  return "{" + joined_terms(fri, result, ',') + "}";
}

void write_result(std::ostream& out, const MiningResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      for (const auto& f : result.fris)
        out << itemset_label(f, result) << ' ' << format_number(f.support) << ' '
            << to_string(f.kind) << '\n';
      break;
    case OutputFormat::csv:
      out << "terms,length,support,kind\n";
      for (const auto& f : result.fris)
        out << joined_terms(f, result, ' ') << ',' << f.ranks.size() << ','
            << format_number(f.support) << ',' << to_string(f.kind) << '\n';
      break;
    case OutputFormat::json: {
      ordered_json fris = ordered_json::array();
      for (const auto& f : result.fris) {
        ordered_json terms = ordered_json::array();
        for (const Rank r : f.ranks) terms.push_back(result.terms.at(r).name);
        fris.push_back({{"terms", std::move(terms)},
                        {"support", canonical_number(f.support)},
                        {"kind", to_string(f.kind)}});
      }
      ordered_json doc = {
          {"transactions", result.transactions},
          {"thresholds",
           {{"min_rare", canonical_number(result.thresholds.min_rare_abs)},
            {"max_freq", std::isfinite(result.thresholds.max_freq_abs)
                             ? ordered_json(canonical_number(result.thresholds.max_freq_abs))
                             : ordered_json("inf")}}},
          {"fris", std::move(fris)},
          {"stats", stats_json(result.stats)}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

void write_fuzzification(std::ostream& out, const QuantitativeDatabase& db,
                         const MembershipFunctionConfig& config, const FuzzificationResult& fz,
                         OutputFormat format) {
  const auto& revised = fz.revised;
  switch (format) {
    case OutputFormat::text: {
      out << "# transformed\n";
      for (const auto& tx : fz.transformed) {
        out << 't' << tx.tid << ':';
        for (const auto& m : tx.memberships)
          out << ' ' << term_name(m.term, db, config) << ':' << format_number(m.degree);
        out << '\n';
      }
      if (revised.empty()) {
        out << "# no retained terms\n";
        break;
      }
      out << "# order:";
      for (std::size_t r = 0; r < revised.terms().size(); ++r)
        out << (r ? " < " : " ") << revised.terms()[r].name << ':'
            << format_number(revised.terms()[r].support);
      out << "\n# revised\n";
      for (const auto& tx : revised.transactions()) {
        out << 't' << tx.tid << ':';
        for (const auto& e : tx.entries)
          out << ' ' << revised.name(e.rank) << ':' << format_number(e.degree);
        out << '\n';
      }
      break;
    }
    case OutputFormat::csv: {
      out << "view,tid,rank,term,value\n";
      for (const auto& tx : fz.transformed)
        for (const auto& m : tx.memberships)
          out << "transformed," << tx.tid << ",," << term_name(m.term, db, config) << ','
              << format_number(m.degree) << '\n';
      for (std::size_t r = 0; r < revised.terms().size(); ++r)
        out << "order,," << r << ',' << revised.terms()[r].name << ','
            << format_number(revised.terms()[r].support) << '\n';
      for (const auto& tx : revised.transactions())
        for (const auto& e : tx.entries)
          out << "revised," << tx.tid << ',' << e.rank << ',' << revised.name(e.rank) << ','
              << format_number(e.degree) << '\n';
      break;
    }
    case OutputFormat::json: {
      ordered_json transformed = ordered_json::array();
      for (const auto& tx : fz.transformed) {
        ordered_json ms = ordered_json::array();
        for (const auto& m : tx.memberships)
          ms.push_back({{"term", term_name(m.term, db, config)},
                        {"degree", canonical_number(m.degree)}});
        transformed.push_back({{"tid", tx.tid}, {"memberships", std::move(ms)}});
      }
      ordered_json order = ordered_json::array();
      for (const auto& t : revised.terms())
        order.push_back({{"term", t.name}, {"support", canonical_number(t.support)}});
      ordered_json rows = ordered_json::array();
      for (const auto& tx : revised.transactions()) {
        ordered_json es = ordered_json::array();
        for (const auto& e : tx.entries)
          es.push_back({{"term", revised.name(e.rank)}, {"degree", canonical_number(e.degree)}});
        rows.push_back({{"tid", tx.tid}, {"terms", std::move(es)}});
      }
      ordered_json doc = {{"transformed", std::move(transformed)},
                          {"order", std::move(order)},
                          {"revised", std::move(rows)}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

void write_stats(std::ostream& out, const DatabaseStats& s, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      out << "transactions " << s.transactions << '\n'
          << "distinct_items " << s.distinct_items << '\n'
          << "entries " << s.total_entries << '\n'
          << "avg_length " << format_number(s.average_length) << '\n'
          << "max_quantity " << format_number(s.max_quantity) << '\n';
      break;
    case OutputFormat::csv:
      out << "transactions,distinct_items,entries,avg_length,max_quantity\n"
          << s.transactions << ',' << s.distinct_items << ',' << s.total_entries << ','
          << format_number(s.average_length) << ',' << format_number(s.max_quantity) << '\n';
      break;
    case OutputFormat::json: {
      ordered_json doc = {{"transactions", s.transactions},
                          {"distinct_items", s.distinct_items},
                          {"entries", s.total_entries},
                          {"avg_length", canonical_number(s.average_length)},
                          {"max_quantity", canonical_number(s.max_quantity)}};
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace frim
