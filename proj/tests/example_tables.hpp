#pragma once

// Hand-transcribed expectations for the eight-transaction running example:
// the fuzzified degrees of every item occurrence and the revised database.
// Test code only; nothing here is computed by the library.

#include <string>
#include <vector>

namespace frim::testing {

struct ExpectedDegree {
  std::string term;  // "B.M"
  double degree;
};

// Per transaction (t1..t8), every non-zero term degree in item order.
inline const std::vector<std::vector<ExpectedDegree>>& transformed_table() {
  static const std::vector<std::vector<ExpectedDegree>> table = {
      {{"A.L", 0.6}, {"A.M", 0.4}, {"B.L", 0.2}, {"B.M", 0.8}, {"D.M", 0.2}, {"D.H", 0.8},
       {"E.M", 0.4}, {"E.H", 0.6}},
      {{"B.M", 0.6}, {"B.H", 0.4}, {"D.L", 0.6}, {"D.M", 0.4}},
      {{"A.L", 0.6}, {"A.M", 0.4}, {"B.M", 0.6}, {"B.H", 0.4}, {"D.M", 0.4}, {"D.H", 0.6},
       {"F.L", 0.2}, {"F.M", 0.8}},
      {{"B.L", 0.2}, {"B.M", 0.8}, {"C.L", 0.4}, {"C.M", 0.6}, {"D.H", 1.0}, {"E.L", 0.8},
       {"E.M", 0.2}},
      {{"B.M", 0.8}, {"B.H", 0.2}, {"C.L", 0.6}, {"C.M", 0.4}, {"D.L", 0.2}, {"D.M", 0.8},
       {"F.L", 0.6}, {"F.M", 0.4}},
      {{"A.L", 0.8}, {"A.M", 0.2}, {"B.L", 0.2}, {"B.M", 0.8}, {"C.L", 0.6}, {"C.M", 0.4},
       {"D.M", 0.8}, {"D.H", 0.2}},
      {{"A.L", 0.8}, {"A.M", 0.2}, {"B.L", 0.4}, {"B.M", 0.6}, {"D.M", 0.4}, {"D.H", 0.6},
       {"F.L", 0.8}, {"F.M", 0.2}},
      {{"B.L", 0.2}, {"B.M", 0.8}, {"C.L", 0.8}, {"C.M", 0.2}, {"D.M", 0.2}, {"D.H", 0.8},
       {"E.L", 0.6}, {"E.M", 0.4}},
  };
  return table;
}

inline constexpr int kItemOccurrences = 30;

// Revised database rows in support-ascending order.
inline const std::vector<std::vector<ExpectedDegree>>& revised_table() {
  static const std::vector<std::vector<ExpectedDegree>> table = {
      {{"A.L", 0.6}, {"D.H", 0.8}, {"B.M", 0.8}},
      {{"B.M", 0.6}},
      {{"A.L", 0.6}, {"D.H", 0.6}, {"B.M", 0.6}},
      {{"C.L", 0.4}, {"D.H", 1.0}, {"B.M", 0.8}},
      {{"C.L", 0.6}, {"B.M", 0.8}},
      {{"C.L", 0.6}, {"A.L", 0.8}, {"D.H", 0.2}, {"B.M", 0.8}},
      {{"A.L", 0.8}, {"D.H", 0.6}, {"B.M", 0.6}},
      {{"C.L", 0.8}, {"D.H", 0.8}, {"B.M", 0.8}},
  };
  return table;
}

// Column sum of one term over the transformed table.
inline double transformed_column_sum(const std::string& term) {
  double sum = 0.0;
  for (const auto& row : transformed_table())
    for (const auto& d : row)
      if (d.term == term) sum += d.degree;
  return sum;
}

}  // namespace frim::testing
