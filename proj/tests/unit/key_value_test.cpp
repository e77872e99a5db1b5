#include <gtest/gtest.h>

#include <cmath>

#include "gtsp/error.hpp"
#include "gtsp/key_value.hpp"

using namespace gtsp;

TEST(KeyValue, ParsesCommentsBlanksAndDashes) {
  const auto kv = KeyValueConfig::parse(
      "# campaign\n"
      "n = 60\n"
      "\n"
      "m-max=6   # trailing comment\n"
      "mse_threshold = 3e-5\n"
      "wavelet = db4\n"
      "n = 64\n");
  EXPECT_EQ(kv.get_size("n", 0), 64u);  // later keys win
  EXPECT_EQ(kv.get_size("m_max", 0), 6u);
  EXPECT_EQ(kv.get_size("M-MAX", 0), 6u);
  EXPECT_DOUBLE_EQ(kv.get_double("mse-threshold", 0.0), 3e-5);
  EXPECT_EQ(kv.get_string("wavelet", ""), "db4");
  EXPECT_FALSE(kv.contains("f0"));
}

TEST(KeyValue, MalformedLineIsReported) {
  try {
    KeyValueConfig::parse("n = 3\njust words\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedLine);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(KeyValue, TypedGettersRejectGarbage) {
  const auto kv = KeyValueConfig::parse("a = 1x\nb = -3\nc = maybe\nd = inf\n");
  EXPECT_THROW(kv.get_double("a", 0.0), Error);
  EXPECT_THROW(kv.get_size("b", 0), Error);
  EXPECT_THROW(kv.get_bool("c", false), Error);
  EXPECT_TRUE(std::isinf(kv.get_double("d", 0.0)));
  EXPECT_EQ(kv.get_size("missing", 7), 7u);
}

TEST(KeyValue, PipelineKeysOverlayDefaults) {
  const auto kv = KeyValueConfig::parse(
      "n = 128\nf0 = 1\nm = 5\nwindow_policy = growing\nrefit_each_step = false\n");
  const PipelineConfig c = apply_pipeline_keys(kv, PipelineConfig{});
  EXPECT_EQ(c.n, 128u);
  EXPECT_EQ(c.f0, 1.0);
  EXPECT_EQ(c.m_fixed, 5u);
  EXPECT_EQ(c.window_policy, WindowPolicy::Growing);
  EXPECT_FALSE(c.refit_each_step);
  EXPECT_EQ(c.wavelet, "haar");
  EXPECT_THROW(apply_pipeline_keys(KeyValueConfig::parse("window_policy = both\n"), {}), Error);
}
