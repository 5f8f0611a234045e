#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "frim/format.hpp"
#include "frim/result_io.hpp"
#include "frim/running_example.hpp"

namespace frim {
namespace {

const auto kConfig = MembershipFunctionConfig::default_config();

MiningResult example_result() {
  return mine(running_example(), kConfig, {0.25, 0.5, ThresholdMode::relative});
}

std::string render(const MiningResult& r, OutputFormat f) {
  std::ostringstream os;
  write_result(os, r, f);
  return os.str();
}

TEST(FormatNumber, RoundsAccumulationNoise) {
  EXPECT_EQ(format_number(0.4 + 0.6 + 0.6 + 0.8), "2.4");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(0.1 + 0.2), "0.3");
  EXPECT_EQ(format_number(-1e-12), "0");
  EXPECT_EQ(format_number(123456.125), "123456.125");
}

TEST(ResultText, RunningExample) {
  EXPECT_EQ(render(example_result(), OutputFormat::text),
            "{C.L} 2.4 rare-only\n"
            "{A.L} 2.8 rare-only\n"
            "{C.L,B.M} 2.4 mixed\n"
            "{A.L,D.H} 2 mixed\n"
            "{A.L,B.M} 2.6 mixed\n"
            "{D.H,B.M} 3.8 frequent-only\n"
            "{A.L,D.H,B.M} 2 mixed\n");
}

TEST(ResultCsv, RunningExample) {
  const auto csv = render(example_result(), OutputFormat::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "terms,length,support,kind");
  EXPECT_NE(csv.find("\nA.L D.H,2,2,mixed\n"), std::string::npos);
  EXPECT_NE(csv.find("\nA.L D.H B.M,3,2,mixed\n"), std::string::npos);
}

TEST(ResultJson, StructureAndValues) {
  const auto doc = nlohmann::json::parse(render(example_result(), OutputFormat::json));
  EXPECT_EQ(doc["transactions"], 8);
  EXPECT_EQ(doc["thresholds"]["min_rare"], 2.0);
  EXPECT_EQ(doc["thresholds"]["max_freq"], 4.0);
  ASSERT_EQ(doc["fris"].size(), 7u);
  const auto& f = doc["fris"][3];
  EXPECT_EQ(f["terms"], nlohmann::json::array({"A.L", "D.H"}));
  EXPECT_EQ(f["support"].get<double>(), 2.0);
  EXPECT_EQ(f["kind"], "mixed");
  for (const char* key : {"candidates", "lists_constructed", "joins_pruned", "peak_list_elements",
                          "peak_memory_bytes", "elapsed_ms"})
    EXPECT_TRUE(doc["stats"].contains(key)) << key;
}

TEST(FuzzificationDump, TextViews) {
  const auto db = running_example();
  const auto fz = fuzzify_database(db, kConfig, 2.0);
  std::ostringstream os;
  write_fuzzification(os, db, kConfig, fz, OutputFormat::text);
  const auto text = os.str();
  EXPECT_NE(text.find("t2: B.M:0.6 B.H:0.4 D.L:0.6 D.M:0.4\n"), std::string::npos);
  EXPECT_NE(text.find("# order: C.L:2.4 < A.L:2.8 < D.H:4 < B.M:5.8\n"), std::string::npos);
  const auto revised = text.substr(text.find("# revised"));
  EXPECT_NE(revised.find("\nt2: B.M:0.6\n"), std::string::npos);
  EXPECT_NE(revised.find("\nt6: C.L:0.6 A.L:0.8 D.H:0.2 B.M:0.8\n"), std::string::npos);
}

TEST(FuzzificationDump, CsvAndJson) {
  const auto db = running_example();
  const auto fz = fuzzify_database(db, kConfig, 2.0);
  std::ostringstream csv;
  write_fuzzification(csv, db, kConfig, fz, OutputFormat::csv);
  EXPECT_NE(csv.str().find("transformed,4,,D.H,1\n"), std::string::npos);
  EXPECT_NE(csv.str().find("order,,0,C.L,2.4\n"), std::string::npos);
  EXPECT_NE(csv.str().find("revised,2,3,B.M,0.6\n"), std::string::npos);

  std::ostringstream js;
  write_fuzzification(js, db, kConfig, fz, OutputFormat::json);
  const auto doc = nlohmann::json::parse(js.str());
  EXPECT_EQ(doc["transformed"].size(), 8u);
  EXPECT_EQ(doc["order"][0]["term"], "C.L");
  EXPECT_EQ(doc["revised"][1]["terms"][0]["term"], "B.M");
}

TEST(FuzzificationDump, NoRetainedTerms) {
  const auto db = running_example();
  const auto fz = fuzzify_database(db, kConfig, 50.0);
  std::ostringstream os;
  write_fuzzification(os, db, kConfig, fz, OutputFormat::text);
  EXPECT_NE(os.str().find("# no retained terms\n"), std::string::npos);
}

TEST(OutputFormatName, Parsing) {
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::csv);
  EXPECT_THROW(parse_output_format("xml"), ValidationError);
}

}  // namespace
}  // namespace frim
