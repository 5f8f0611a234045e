#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "frim/dataset.hpp"
#include "frim/fuzzifier.hpp"
#include "frim/miner.hpp"

namespace frim {

enum class OutputFormat { text, csv, json };

/// Throws ValidationError for anything but "text", "csv" or "json".
OutputFormat parse_output_format(std::string_view name);

std::string itemset_label(const FuzzyRareItemset& fri, const MiningResult& result);

/// text: `{A.L,D.H} 2 mixed` per line
/// csv:  `terms,length,support,kind` with terms space-separated
/// json: {"thresholds":…, "transactions":n, "fris":[…], "stats":…}
void write_result(std::ostream& out, const MiningResult& result, OutputFormat format);

/// Transformed (every term) and revised (retained terms, global order) views.
void write_fuzzification(std::ostream& out, const QuantitativeDatabase& db,
                         const MembershipFunctionConfig& config, const FuzzificationResult& fz,
                         OutputFormat format);

void write_stats(std::ostream& out, const DatabaseStats& stats, OutputFormat format);

}  // namespace frim
