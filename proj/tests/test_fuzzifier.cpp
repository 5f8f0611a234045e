#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <algorithm>
#include <set>
#include <sstream>

#include "frim/fuzzifier.hpp"
#include "frim/generator.hpp"
#include "frim/running_example.hpp"
#include "example_tables.hpp"

namespace frim {
namespace {

const auto kConfig = MembershipFunctionConfig::default_config();

FuzzyTerm term_of(const QuantitativeDatabase& db, const std::string& name) {
  const auto dot = name.find('.');
  const auto item = db.find_item(name.substr(0, dot));
  const auto label = name.substr(dot + 1);
  for (TermIndex i = 0; i < kConfig.size(); ++i)
    if (kConfig.label(i) == label) return {*item, i};
  throw std::invalid_argument(name);
}

TEST(FuzzifyValue, InterpolatesBetweenPeaks) {
  const auto five = fuzzify_value(5, kConfig);
  ASSERT_EQ(five.size(), 2u);
  EXPECT_EQ(five[0].term, 0);
  EXPECT_NEAR(five[0].degree, 0.2, 1e-12);
  EXPECT_EQ(five[1].term, 1);
  EXPECT_NEAR(five[1].degree, 0.8, 1e-12);
}

TEST(FuzzifyValue, PeaksAndClamping) {
  const auto eleven = fuzzify_value(11, kConfig);
  ASSERT_EQ(eleven.size(), 1u);
  EXPECT_EQ(eleven[0].term, 2);
  EXPECT_EQ(eleven[0].degree, 1.0);

  const auto one = fuzzify_value(1, kConfig);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].term, 0);
  EXPECT_EQ(one[0].degree, 1.0);

  const auto six = fuzzify_value(6, kConfig);
  ASSERT_EQ(six.size(), 1u);
  EXPECT_EQ(six[0].term, 1);
  EXPECT_EQ(six[0].degree, 1.0);

  EXPECT_EQ(fuzzify_value(0.25, kConfig)[0].term, 0);
  EXPECT_EQ(fuzzify_value(400, kConfig)[0].term, 2);
}

TEST(FuzzifyValue, RejectsBadQuantities) {
  EXPECT_THROW(fuzzify_value(0, kConfig), ValidationError);
  EXPECT_THROW(fuzzify_value(-1, kConfig), ValidationError);
  EXPECT_THROW(fuzzify_value(std::nan(""), kConfig), ValidationError);
  EXPECT_THROW(fuzzify_value(INFINITY, kConfig), ValidationError);
}

TEST(FuzzifyValue, DegreesSumToOneOnRandomConfigs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> step(0.01, 50.0);
  std::uniform_int_distribution<int> count(2, 7);
  for (int round = 0; round < 300; ++round) {
    std::vector<MembershipTerm> terms;
    double peak = step(rng);
    const int n = count(rng);
    for (int i = 0; i < n; ++i, peak += step(rng)) terms.push_back({"T" + std::to_string(i), peak});
    const MembershipFunctionConfig config(terms);
    std::uniform_real_distribution<double> q(1e-6, peak * 1.2);
    for (int k = 0; k < 50; ++k) {
      const auto ms = fuzzify_value(q(rng), config);
      ASSERT_FALSE(ms.empty());
      ASSERT_LE(ms.size(), 2u);
      if (ms.size() == 2) ASSERT_EQ(ms[1].term, ms[0].term + 1);
      double sum = 0;
      for (const auto& m : ms) {
        ASSERT_GT(m.degree, 0.0);
        ASSERT_LE(m.degree, 1.0);
        sum += m.degree;
      }
      ASSERT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(TransformDatabase, ReproducesEveryTransformedDegree) {
  const auto db = running_example();
  const auto fuzzy = transform_database(db, kConfig);
  ASSERT_EQ(fuzzy.size(), 8u);
  const auto& table = testing::transformed_table();
  int occurrences = 0;
  for (std::size_t t = 0; t < 8; ++t) {
    EXPECT_EQ(fuzzy[t].tid, t + 1);
    occurrences += static_cast<int>(db.transactions()[t].entries.size());
    ASSERT_EQ(fuzzy[t].memberships.size(), table[t].size()) << "t" << t + 1;
    for (std::size_t k = 0; k < table[t].size(); ++k) {
      EXPECT_EQ(term_name(fuzzy[t].memberships[k].term, db, kConfig), table[t][k].term);
      EXPECT_NEAR(fuzzy[t].memberships[k].degree, table[t][k].degree, 1e-9);
    }
  }
  EXPECT_EQ(occurrences, testing::kItemOccurrences);
}

TEST(TransformDatabase, ParallelMatchesSerial) {
  SyntheticShape shape;
  shape.transactions = 3000;
  shape.items = 300;
  const auto db = synthetic_database(3, shape);
  const MembershipFunctionConfig config({{"L", 1}, {"M", 21}, {"H", 31}});
  const auto serial = transform_database(db, config, 1);
  const auto parallel = transform_database(db, config, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t t = 0; t < serial.size(); ++t) {
    ASSERT_EQ(serial[t].tid, parallel[t].tid);
    ASSERT_EQ(serial[t].memberships.size(), parallel[t].memberships.size());
    for (std::size_t k = 0; k < serial[t].memberships.size(); ++k) {
      EXPECT_EQ(serial[t].memberships[k].term, parallel[t].memberships[k].term);
      EXPECT_EQ(serial[t].memberships[k].degree, parallel[t].memberships[k].degree);
    }
  }
}

TEST(TermSupports, RunningExampleValues) {
  const auto db = running_example();
  const auto fuzzy = transform_database(db, kConfig);
  const auto s = term_supports(fuzzy);
  EXPECT_NEAR(s.at(term_of(db, "B.M")), 5.8, 1e-9);
  EXPECT_NEAR(s.at(term_of(db, "A.L")), 2.8, 1e-9);
  EXPECT_NEAR(s.at(term_of(db, "C.L")), 2.4, 1e-9);
  EXPECT_NEAR(s.at(term_of(db, "D.H")), 4.0, 1e-9);
  // Column sums of the hand-transcribed table.
  EXPECT_NEAR(s.at(term_of(db, "E.L")), testing::transformed_column_sum("E.L"), 1e-9);
  EXPECT_NEAR(s.at(term_of(db, "F.L")), testing::transformed_column_sum("F.L"), 1e-9);
  EXPECT_NEAR(testing::transformed_column_sum("E.L"), 1.4, 1e-9);
  EXPECT_NEAR(testing::transformed_column_sum("F.L"), 1.6, 1e-9);
  EXPECT_EQ(s.count(term_of(db, "A.H")), 0u);
}

TEST(TermSupports, AccumulationAndScanAgreeExactly) {
  const auto db = running_example();
  const auto fuzzy = transform_database(db, kConfig);
  const auto all = term_supports(fuzzy);
  EXPECT_EQ(all.at(term_of(db, "B.M")), term_support(term_of(db, "B.M"), fuzzy));

  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const auto rdb = random_small_database(rng, {10, 6, 15});
    const auto rf = transform_database(rdb, kConfig);
    for (const auto& [term, support] : term_supports(rf)) ASSERT_EQ(support, term_support(term, rf));
  }
}

TEST(SelectMaxCardinality, PicksLargestSupport) {
  const auto db = running_example();
  const auto chosen = select_max_cardinality(term_supports(transform_database(db, kConfig)));
  ASSERT_EQ(chosen.size(), 6u);
  EXPECT_EQ(chosen.at(*db.find_item("A")).term, term_of(db, "A.L"));
  EXPECT_NEAR(chosen.at(*db.find_item("A")).support, 2.8, 1e-9);
  EXPECT_EQ(chosen.at(*db.find_item("D")).term, term_of(db, "D.H"));
  EXPECT_NEAR(testing::transformed_column_sum("D.H"), 4.0, 1e-9);
  EXPECT_NEAR(testing::transformed_column_sum("D.M"), 3.2, 1e-9);
  EXPECT_NEAR(testing::transformed_column_sum("D.L"), 0.8, 1e-9);
}

TEST(SelectMaxCardinality, TieGoesToLowestTermIndex) {
  const TermSupportMap supports = {{{0, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 2}, 0.5}, {{1, 1}, 0.5}};
  const auto chosen = select_max_cardinality(supports);
  EXPECT_EQ(chosen.at(0).term.term, 0);
  EXPECT_EQ(chosen.at(1).term.term, 1);
}

std::vector<std::vector<testing::ExpectedDegree>> rows_of(const RevisedDatabase& revised) {
  std::vector<std::vector<testing::ExpectedDegree>> rows;
  for (const auto& tx : revised.transactions()) {
    rows.emplace_back();
    for (const auto& e : tx.entries) rows.back().push_back({revised.name(e.rank), e.degree});
  }
  return rows;
}

TEST(RevisedDatabase, MatchesRevisedTableRowForRow) {
  const auto db = running_example();
  const auto fz = fuzzify_database(db, kConfig, 0.25 * 8);
  const auto& revised = fz.revised;
  ASSERT_EQ(revised.terms().size(), 4u);
  EXPECT_EQ(revised.name(0), "C.L");
  EXPECT_EQ(revised.name(1), "A.L");
  EXPECT_EQ(revised.name(2), "D.H");
  EXPECT_EQ(revised.name(3), "B.M");
  EXPECT_FALSE(revised.rank_of("E.L"));
  EXPECT_FALSE(revised.rank_of("F.L"));
  EXPECT_EQ(revised.original_size(), 8u);

  const auto rows = rows_of(revised);
  const auto& table = testing::revised_table();
  ASSERT_EQ(rows.size(), table.size());
  for (std::size_t t = 0; t < table.size(); ++t) {
    ASSERT_EQ(rows[t].size(), table[t].size()) << "t" << t + 1;
    for (std::size_t k = 0; k < table[t].size(); ++k) {
      EXPECT_EQ(rows[t][k].term, table[t][k].term);
      EXPECT_NEAR(rows[t][k].degree, table[t][k].degree, 1e-9);
    }
  }
}

TEST(RevisedDatabase, ZeroThresholdKeepsEveryChosenTerm) {
  const auto db = running_example();
  const auto fz = fuzzify_database(db, kConfig, 0.0);
  ASSERT_EQ(fz.revised.terms().size(), 6u);
  // E.L 1.4 < F.L 1.6 < C.L 2.4 < A.L 2.8 < D.H 4 < B.M 5.8
  EXPECT_EQ(fz.revised.name(0), "E.L");
  EXPECT_EQ(fz.revised.name(1), "F.L");
  EXPECT_EQ(fz.revised.name(5), "B.M");
}

TEST(RevisedDatabase, ThresholdAtExactSupportIsKept) {
  const auto db = running_example();
  EXPECT_TRUE(fuzzify_database(db, kConfig, 2.4).revised.rank_of("C.L"));
  EXPECT_FALSE(fuzzify_database(db, kConfig, 2.41).revised.rank_of("C.L"));
  EXPECT_TRUE(fuzzify_database(db, kConfig, 100).revised.empty());
  EXPECT_THROW(fuzzify_database(db, kConfig, -1), ValidationError);
}

TEST(RevisedDatabase, EqualSupportsOrderByName) {
  std::istringstream in("b:1 a:1\nc:1\n");
  const auto db = parse_database(in);
  const auto fz = fuzzify_database(db, kConfig, 0.0);
  ASSERT_EQ(fz.revised.terms().size(), 3u);
  EXPECT_EQ(fz.revised.name(0), "a.L");
  EXPECT_EQ(fz.revised.name(1), "b.L");
  EXPECT_EQ(fz.revised.name(2), "c.L");
  EXPECT_EQ(fz.revised.transactions()[0].entries[0].rank, 0u);
}

TEST(RevisedDatabase, InvariantsOnRandomDatabases) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const auto db = random_small_database(rng, {10, 6, 12});
    const double threshold = std::uniform_real_distribution<double>(0, 3)(rng);
    const auto fz = fuzzify_database(db, kConfig, threshold);
    const auto& revised = fz.revised;
    std::set<ItemId> variables;
    for (std::size_t r = 0; r < revised.terms().size(); ++r) {
      const auto& t = revised.terms()[r];
      ASSERT_TRUE(variables.insert(t.term.item).second);
      ASSERT_GE(t.support, threshold - kSupportEpsilon);
      if (r > 0) ASSERT_LE(revised.terms()[r - 1].support, t.support + kSupportEpsilon);
    }
    for (std::size_t t = 0; t < revised.transactions().size(); ++t) {
      const auto& tx = revised.transactions()[t];
      for (std::size_t k = 0; k < tx.entries.size(); ++k) {
        if (k > 0) ASSERT_LT(tx.entries[k - 1].rank, tx.entries[k].rank);
        // Selection never rescales a degree.
        const auto term = revised.terms()[tx.entries[k].rank].term;
        const auto& ms = fz.transformed[t].memberships;
        const auto it = std::find_if(ms.begin(), ms.end(), [&](const FuzzyEntry& m) { return m.term == term; });
        ASSERT_NE(it, ms.end());
        ASSERT_EQ(it->degree, tx.entries[k].degree);
      }
    }
  }
}

}  // namespace
}  // namespace frim
