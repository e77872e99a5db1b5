#pragma once

#include <cstddef>
#include <optional>
#include <span>

namespace gtsp {

/// Which differences form the MASE naive-walk denominator.
enum class MaseDenominator {
  FullSeries,  // all Q = n + q samples, the literal form
  Training,    // first n samples only, the common textbook form
};

/// 200/q sum |y - yhat| / (|y| + |yhat|); a 0/0 term counts as 0.
double smape(std::span<const double> actual, std::span<const double> predicted);

/// ((n-1)/q) sum |y - yhat| / sum_{j=2..Q} |y_j - y_{j-1}| where `full_series`
/// holds the n training values followed by the q actual values.
double mase(std::span<const double> actual, std::span<const double> predicted,
            std::span<const double> full_series, std::size_t n,
            MaseDenominator denominator = MaseDenominator::FullSeries);

/// Sample standard deviation of E_k = y_k - yhat_k (divisor q - 1).
double std_err(std::span<const double> actual, std::span<const double> predicted);

double mae(std::span<const double> actual, std::span<const double> predicted);

struct EvaluationReport {
  double smape = 0.0;               // percent
  std::optional<double> mase;       // empty when the naive walk is flat
  std::optional<double> std;        // empty when q < 2
  double mae = 0.0;                 // meters
  std::size_t q = 0;
  std::size_t n = 0;
};

/// All four criteria. `training` holds the n values preceding `actual`.
EvaluationReport evaluate(std::span<const double> actual, std::span<const double> predicted,
                          std::span<const double> training,
                          MaseDenominator denominator = MaseDenominator::FullSeries);

}  // namespace gtsp
