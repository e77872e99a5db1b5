#pragma once

#include <cstddef>
#include <vector>

#include "gtsp/harmonic.hpp"
#include "gtsp/preprocess.hpp"
#include "gtsp/types.hpp"

namespace gtsp {

/// Everything needed to evaluate y(t) = low(t) + high(t) + a + b t + M at a
/// window-relative time t = epoch - origin.
struct TrainedModel {
  double mean = 0.0;
  double trend_a = 0.0;
  double trend_b = 0.0;
  FrequencyGrid grid;
  BandCoefficients low;
  BandCoefficients high;
  double training_mse = 0.0;
  std::size_t m_used = 0;
  double origin = 0.0;      // series epoch mapped to t = 0
  double last_epoch = 0.0;  // series epoch of the last training sample
  std::size_t window_length = 0;
  bool rank_deficient = false;
  /// Training MSE of every m probed, in probe order starting at the first m.
  std::vector<double> mse_by_m;

  /// Model value at series epoch `epoch`, with no causality check.
  double reconstruct(double epoch) const;
};

/// Detrend, split, fit both bands; grow m until the training MSE drops below
/// the threshold. Falls back to the m with the lowest MSE (ties to smaller m).
TrainedModel train(const Window& window, const PipelineConfig& config);

/// Fits one fixed m, skipping the search. Used by train() and by ablations.
TrainedModel train_fixed(const Window& window, const PipelineConfig& config, std::size_t m);

/// Throws NonCausalEpoch unless t_next is after the last training epoch.
double predict_one(const TrainedModel& model, double t_next);

/// Weighted mean of squared reconstruction errors, weights normalised to mean 1.
double training_mse(const TrainedModel& model, const Window& window);

struct HorizonForecast {
  std::vector<Sample> predictions;
  /// One model per refit (a single entry when refit_each_step is false).
  std::vector<TrainedModel> models;
};

/// Auto-regressive forecast of q steps spaced `step` apart from the end of
/// `window`. Each prediction re-enters the window as a unit-weight
/// pseudo-observation.
HorizonForecast forecast_window(Window window, const PipelineConfig& config, std::size_t q,
                                double step);

/// Forecast q samples past the end of `series`, training on its last n samples.
HorizonForecast forecast_series(const TimeSeries& series, const PipelineConfig& config,
                                std::size_t q);

std::vector<Sample> predict_horizon(const TimeSeries& series, const PipelineConfig& config,
                                    std::size_t q);

}  // namespace gtsp
