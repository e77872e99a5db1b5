#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "error_code.hpp"
#include "gtsp/metrics.hpp"

using namespace gtsp;

using V = std::vector<double>;

TEST(Smape, Examples) {
  EXPECT_EQ(smape(V{1, 2, 3}, V{1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(smape(V{1}, V{3}), 100.0);
  EXPECT_EQ(smape(V{0}, V{0}), 0.0);
  EXPECT_DOUBLE_EQ(smape(V{0, 1}, V{0, -1}), 100.0);
  EXPECT_EQ(code_of([] { smape(V{1, 2}, V{1}); }), ErrorCode::LengthMismatch);
  EXPECT_EQ(code_of([] { smape(V{}, V{}); }), ErrorCode::EmptyInput);
}

TEST(Mase, Examples) {
  EXPECT_EQ(mase(V{3, 4}, V{3, 4}, V{0, 1, 2, 3, 4}, 3), 0.0);
  EXPECT_DOUBLE_EQ(mase(V{3, 4}, V{3, 5}, V{0, 1, 2, 3, 4}, 3), 0.25);
  EXPECT_EQ(code_of([] { mase(V{2, 2}, V{1, 2}, V{2, 2, 2, 2}, 2); }), ErrorCode::ZeroDenominator);
  EXPECT_EQ(code_of([] { mase(V{3, 4}, V{3, 5}, V{0, 1, 2, 3}, 3); }), ErrorCode::LengthMismatch);
}

TEST(Mase, TrainingDenominatorVariant) {
  // Training walk 0,1,2 sums to 2 instead of 4 over the full series.
  EXPECT_DOUBLE_EQ(mase(V{3, 4}, V{3, 5}, V{0, 1, 2, 3, 4}, 3, MaseDenominator::Training), 0.5);
}

TEST(StdErr, Examples) {
  EXPECT_EQ(std_err(V{1.5, 2.5, 3.5}, V{1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(std_err(V{0, 2}, V{0, 0}), std::sqrt(2.0));
  EXPECT_EQ(code_of([] { std_err(V{1}, V{0}); }), ErrorCode::InsufficientData);
}

TEST(Mae, Examples) {
  EXPECT_EQ(mae(V{1, 2}, V{1, 2}), 0.0);
  EXPECT_EQ(mae(V{0, 0}, V{1, -1}), 1.0);
  EXPECT_EQ(mae(V{2, 4}, V{1, 1}) * 2.0, mae(V{4, 8}, V{2, 2}));
  EXPECT_EQ(code_of([] { mae(V{}, V{}); }), ErrorCode::EmptyInput);
}

TEST(Evaluate, CombinesAllCriteria) {
  const auto r = evaluate(V{3, 4}, V{3, 5}, V{0, 1, 2});
  EXPECT_DOUBLE_EQ(r.smape, 100.0 * (1.0 / 9.0));
  ASSERT_TRUE(r.mase.has_value());
  EXPECT_DOUBLE_EQ(*r.mase, 0.25);
  ASSERT_TRUE(r.std.has_value());
  EXPECT_DOUBLE_EQ(*r.std, std::sqrt(0.5));
  EXPECT_EQ(r.mae, 0.5);
  EXPECT_EQ(r.q, 2u);
  EXPECT_EQ(r.n, 3u);

  const auto single = evaluate(V{5}, V{5}, V{5, 5});
  EXPECT_FALSE(single.mase.has_value());
  EXPECT_FALSE(single.std.has_value());
}

class MetricProperties : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(GetParam());
    std::normal_distribution<double> g(0.0, 1.0);
    for (int i = 0; i < 30; ++i) train.push_back(g(rng));
    for (int i = 0; i < 12; ++i) {
      actual.push_back(g(rng));
      predicted.push_back(g(rng));
    }
    full = train;
    full.insert(full.end(), actual.begin(), actual.end());
  }
  V train, actual, predicted, full;
};

TEST_P(MetricProperties, SmapeSymmetricAndBounded) {
  const double a = smape(actual, predicted);
  EXPECT_DOUBLE_EQ(a, smape(predicted, actual));
  EXPECT_GE(a, 0.0);
  EXPECT_LE(a, 200.0);
}

TEST_P(MetricProperties, MaseScaleInvariant) {
  const double base = mase(actual, predicted, full, train.size());
  for (double lambda : {0.01, 3.0, 1e5}) {
    V a = actual, p = predicted, f = full;
    for (auto* vec : {&a, &p, &f}) {
      for (double& x : *vec) x *= lambda;
    }
    EXPECT_NEAR(mase(a, p, f, train.size()), base, 1e-12 * base);
  }
}

TEST_P(MetricProperties, StdInvariantUnderCommonShift) {
  V a = actual, p = predicted;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double shift = 0.7 * static_cast<double>(i) - 2.0;
    a[i] += shift;
    p[i] += shift;
  }
  EXPECT_NEAR(std_err(a, p), std_err(actual, predicted), 1e-12);
}

TEST_P(MetricProperties, MaeBoundedByLargestError) {
  double worst = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) worst = std::max(worst, std::fabs(actual[i] - predicted[i]));
  const double m = mae(actual, predicted);
  EXPECT_GE(m, 0.0);
  EXPECT_LE(m, worst);
}

INSTANTIATE_TEST_SUITE_P(Seeds, MetricProperties, ::testing::Range(1, 9));
