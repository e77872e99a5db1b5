#include <gtest/gtest.h>

#include "error_code.hpp"
#include "gtsp/error.hpp"
#include "gtsp/ingest.hpp"
#include "gtsp/results.hpp"

using namespace gtsp;

namespace {

// Two tenv3 rows built from the published column layout; values by hand.
constexpr const char* kTenv3 =
    "site YYMMMDD yyyy.yyyy __MJD week d reflon _e0(m) __east(m) ____n0(m) _north(m) u0(m) "
    "____up(m) _ant(m) sig_e(m) sig_n(m) sig_u(m) __corr_en __corr_eu __corr_nu _latitude(deg) "
    "_longitude(deg) __height(m)\n"
    "P123 08JAN01 2008.0014 54466 1460 2 -122.1 -4478 0.123456 4412170 -0.654321 0 0.012345 "
    "0.0000 0.0011 0.0013 0.0045 0.010 -0.020 0.030 39.8 -122.1 100.5\n"
    "P123 08JAN02 2008.0041 54467 1460 3 -122.1 -4478 0.125000 4412170 -0.650000 0 0.010000 "
    "0.0000 0.0012 0.0014 0.0046 0.010 -0.020 0.030 39.8 -122.1 100.5\n";

}  // namespace

TEST(ParseNgl, EmptyInputIsUnknownFormat) {
  EXPECT_EQ(code_of([] { parse_ngl(""); }), ErrorCode::UnknownFormat);
  EXPECT_EQ(code_of([] { parse_ngl("a b c\n"); }), ErrorCode::UnknownFormat);
}

TEST(ParseNgl, TwoLineFixture) {
  const auto series = parse_ngl(kTenv3);
  ASSERT_EQ(series.size(), 3u);
  const TimeSeries& e = series[0];
  const TimeSeries& n = series[1];
  const TimeSeries& u = series[2];
  EXPECT_EQ(e.component, Component::E);
  EXPECT_EQ(n.component, Component::N);
  EXPECT_EQ(u.component, Component::U);
  for (const auto& s : series) {
    EXPECT_EQ(s.station_id, "P123");
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.sampling_interval, 86400.0);
    EXPECT_EQ(s.origin, 54466.0 * 86400.0);
    EXPECT_EQ(s.samples[1].t, 86400.0);
  }
  EXPECT_DOUBLE_EQ(e.samples[0].value, -4478.0 + 0.123456);
  EXPECT_DOUBLE_EQ(e.samples[1].value, -4478.0 + 0.125);
  EXPECT_DOUBLE_EQ(n.samples[0].value, 4412170.0 - 0.654321);
  EXPECT_DOUBLE_EQ(u.samples[1].value, 0.01);
  EXPECT_EQ(e.samples[0].sigma, 0.0011);
  EXPECT_EQ(n.samples[1].sigma, 0.0014);
  EXPECT_EQ(u.samples[0].sigma, 0.0045);
}

TEST(ParseNgl, NonNumericValueIsMalformedLine) {
  std::string bad = kTenv3;
  bad.replace(bad.find("0.125000"), 8, "0.12x000");
  try {
    parse_ngl(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedLine);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

namespace {

SeriesFileSchema wide_csv() {
  SeriesFileSchema s;
  s.delimiter = ',';
  s.epoch_column = 0;
  s.epoch_unit = EpochUnit::Seconds;
  s.station_id = "HR01";
  s.components = {{Component::E, 1, std::nullopt, 2}, {Component::U, 3, std::nullopt, std::nullopt}};
  return s;
}

}  // namespace

TEST(ParseDelimited, ThreeRowsInSeconds) {
  const auto series = parse_delimited("100,0.1,0.002,5.0\n101,0.2,0.002,5.1\n102,0.3,,5.2\n", wide_csv());
  ASSERT_EQ(series.size(), 2u);
  const TimeSeries& e = series[0];
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e.station_id, "HR01");
  EXPECT_EQ(e.origin, 100.0);
  EXPECT_EQ(e.samples[2].t, 2.0);
  EXPECT_EQ(e.samples[1].value, 0.2);
  EXPECT_EQ(e.samples[0].sigma, 0.002);
  EXPECT_FALSE(e.samples[2].sigma.has_value());
  EXPECT_EQ(e.sampling_interval, 1.0);
  EXPECT_EQ(series[1].samples[2].value, 5.2);
}

TEST(ParseDelimited, ColumnBeyondRowWidth) {
  SeriesFileSchema s = wide_csv();
  s.components[1].value = 7;
  EXPECT_EQ(code_of([&] { parse_delimited("100,0.1,0.002,5.0\n", s); }), ErrorCode::SchemaMismatch);
}

TEST(ParseDelimited, HeaderSkipIsIdentity) {
  const std::string body = "100,0.1,0.002,5.0\n101,0.2,0.002,5.1\n";
  SeriesFileSchema with_header = wide_csv();
  with_header.header_lines = 2;
  const auto a = parse_delimited(body, wide_csv());
  const auto b = parse_delimited("epoch,e,se,u\n# units: s m m m\n" + body, with_header);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].samples, b[i].samples);
}

TEST(ParseDelimited, EpochUnits) {
  EXPECT_EQ(epoch_to_seconds(2.0, EpochUnit::Mjd), 172800.0);
  EXPECT_EQ(epoch_to_seconds(1.0, EpochUnit::DecimalYear), 365.25 * 86400.0);
  SeriesFileSchema s = wide_csv();
  s.epoch_unit = EpochUnit::Mjd;
  const auto series = parse_delimited("1,0,1,0\n2,0,1,0\n", s);
  EXPECT_EQ(series[0].sampling_interval, 86400.0);
}

TEST(ParseDelimited, RepeatedColumnsAreInvalid) {
  SeriesFileSchema s = wide_csv();
  s.components[1].value = 1;
  EXPECT_EQ(code_of([&] { s.validate(); }), ErrorCode::InvalidSchema);
}

TEST(ParseDelimited, SchemaFromConfig) {
  const auto kv = KeyValueConfig::parse(
      "delimiter = ,\nepoch_column = 0\nepoch_unit = seconds\nstation_id = HR01\n"
      "e_value = 1\ne_sigma = 2\nu_value = 3\n");
  const SeriesFileSchema s = SeriesFileSchema::from_config(kv);
  const auto a = parse_delimited("100,0.1,0.002,5.0\n101,0.2,0.002,5.1\n", s);
  const auto b = parse_delimited("100,0.1,0.002,5.0\n101,0.2,0.002,5.1\n", wide_csv());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].component, b[i].component);
    EXPECT_EQ(a[i].samples, b[i].samples);
  }
}

TEST(SeriesTable, RoundTripsThroughOwnFormat) {
  const auto original = parse_ngl(kTenv3);
  const std::string text = write_results(series_table(original), ResultFormat::Delimited);
  const auto back = parse_series(text, SeriesFormat::Auto, std::nullopt);
  ASSERT_EQ(back.size(), original.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].station_id, original[i].station_id);
    EXPECT_EQ(back[i].component, original[i].component);
    EXPECT_EQ(back[i].origin, original[i].origin);
    EXPECT_EQ(back[i].samples, original[i].samples);
  }
}

TEST(ParseSeries, DelimitedNeedsSchema) {
  EXPECT_EQ(code_of([] { parse_series("1,2\n", SeriesFormat::Delimited, std::nullopt); }),
            ErrorCode::InvalidSchema);
  EXPECT_FALSE(parse_series_format("xml").has_value());
}
