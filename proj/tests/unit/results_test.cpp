#include <gtest/gtest.h>

#include <json.hpp>

#include <cmath>
#include <limits>
#include <random>

#include "gtsp/results.hpp"

using namespace gtsp;

TEST(FormatDouble, RoundTripsBitForBit) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
}

TEST(WriteResults, CsvTable) {
  ResultTable t{{"name", "count", "value", "note"}, {}};
  t.add_row({std::string("a,b"), std::int64_t{3}, 0.5, {}});
  t.add_row({std::string("say \"hi\""), std::int64_t{-1}, 2.0, std::string("x")});
  EXPECT_EQ(write_results(t, ResultFormat::Delimited),
            "name,count,value,note\n\"a,b\",3,0.5,\n\"say \"\"hi\"\"\",-1,2,x\n");
}

TEST(WriteResults, JsonTableParses) {
  ResultTable t{{"name", "value", "missing"}, {}};
  t.add_row({std::string("q\"uote"), 0.1, {}});
  t.add_row({std::string("b"), std::numeric_limits<double>::quiet_NaN(), std::int64_t{4}});
  const auto j = nlohmann::json::parse(write_results(t, ResultFormat::StructuredText));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["name"], "q\"uote");
  EXPECT_EQ(j[0]["value"].get<double>(), 0.1);
  EXPECT_TRUE(j[0]["missing"].is_null());
  EXPECT_TRUE(j[1]["value"].is_null());
  EXPECT_EQ(j[1]["missing"], 4);
}

TEST(WriteResults, EmptyTable) {
  const ResultTable t{{"n", "m"}, {}};
  EXPECT_EQ(write_results(t, ResultFormat::StructuredText), "[]\n");
  EXPECT_EQ(write_results(t, ResultFormat::Delimited), "n,m\n");
}

TEST(WriteResults, Record) {
  EvaluationReport r;
  r.smape = 100.0;
  r.mase = 0.25;
  r.mae = 1.0;
  r.q = 2;
  r.n = 3;
  const auto j = nlohmann::json::parse(write_results(to_record(r), ResultFormat::StructuredText));
  EXPECT_EQ(j["smape"].get<double>(), 100.0);
  EXPECT_EQ(j["mase"].get<double>(), 0.25);
  EXPECT_TRUE(j["std"].is_null());
  EXPECT_EQ(j["q"], 2);
  const std::string csv = write_results(to_record(r), ResultFormat::Delimited);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "smape,mase,std,mae,q,n");
}

TEST(WriteResults, FormatNames) {
  EXPECT_EQ(parse_result_format("csv"), ResultFormat::Delimited);
  EXPECT_EQ(parse_result_format("json"), ResultFormat::StructuredText);
  EXPECT_FALSE(parse_result_format("xml").has_value());
}
