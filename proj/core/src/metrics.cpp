#include "gtsp/metrics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "gtsp/error.hpp"

namespace gtsp {
namespace {

void check_pair(std::span<const double> actual, std::span<const double> predicted) {
  if (actual.size() != predicted.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(actual.size()) + " actual vs. " +
                                               std::to_string(predicted.size()) + " predicted");
  }
  if (actual.empty()) throw Error(ErrorCode::EmptyInput, "no predictions");
}

}  // namespace

double smape(std::span<const double> actual, std::span<const double> predicted) {
  check_pair(actual, predicted);
  double sum = 0.0;
  for (std::size_t k = 0; k < actual.size(); ++k) {
    const double denom = std::abs(actual[k]) + std::abs(predicted[k]);
    if (denom > 0.0) sum += std::abs(actual[k] - predicted[k]) / denom;
  }
  return 200.0 / static_cast<double>(actual.size()) * sum;
}

double mase(std::span<const double> actual, std::span<const double> predicted,
            std::span<const double> full_series, std::size_t n, MaseDenominator denominator) {
  check_pair(actual, predicted);
  const std::size_t q = actual.size();
  if (full_series.size() != n + q) {
    throw Error(ErrorCode::LengthMismatch, "full series must hold n + q values");
  }
  if (full_series.size() < 2) throw Error(ErrorCode::InsufficientData, "Q < 2");
  const std::size_t end = denominator == MaseDenominator::FullSeries ? full_series.size() : n;
  double walk = 0.0;
  for (std::size_t j = 1; j < end; ++j) walk += std::abs(full_series[j] - full_series[j - 1]);
  if (!(walk > 0.0)) throw Error(ErrorCode::ZeroDenominator, "naive-walk differences sum to 0");

  double err = 0.0;
  for (std::size_t k = 0; k < q; ++k) err += std::abs(actual[k] - predicted[k]);
  // n - 1 is taken literally; with n = 0 or 1 the scale factor is 0.
  const double scale = n > 0 ? static_cast<double>(n - 1) : 0.0;
  return scale / static_cast<double>(q) * err / walk;
}

double std_err(std::span<const double> actual, std::span<const double> predicted) {
  check_pair(actual, predicted);
  const std::size_t q = actual.size();
  if (q < 2) throw Error(ErrorCode::InsufficientData, "StD needs at least 2 predictions");
  std::vector<double> e(q);
  double mean = 0.0;
  for (std::size_t k = 0; k < q; ++k) {
    e[k] = actual[k] - predicted[k];
    mean += e[k];
  }
  mean /= static_cast<double>(q);
  double ss = 0.0;
  for (double ek : e) ss += (ek - mean) * (ek - mean);
  return std::sqrt(ss / static_cast<double>(q - 1));
}

double mae(std::span<const double> actual, std::span<const double> predicted) {
  check_pair(actual, predicted);
  double sum = 0.0;
  for (std::size_t k = 0; k < actual.size(); ++k) sum += std::abs(actual[k] - predicted[k]);
  return sum / static_cast<double>(actual.size());
}

EvaluationReport evaluate(std::span<const double> actual, std::span<const double> predicted,
                          std::span<const double> training, MaseDenominator denominator) {
  EvaluationReport r;
  r.smape = smape(actual, predicted);
  r.mae = mae(actual, predicted);
  r.q = actual.size();
  r.n = training.size();
  if (r.q >= 2) r.std = std_err(actual, predicted);

  std::vector<double> full(training.begin(), training.end());
  full.insert(full.end(), actual.begin(), actual.end());
  if (full.size() >= 2) {
    try {
      r.mase = mase(actual, predicted, full, training.size(), denominator);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroDenominator) throw;
    }
  }
  return r;
}

}  // namespace gtsp
