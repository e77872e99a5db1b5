#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtsp/key_value.hpp"
#include "gtsp/types.hpp"

namespace gtsp {

struct OutlierFlag {
  std::size_t index = 0;
  double epoch = 0.0;  // series-relative seconds
  double observed = 0.0;
  std::optional<double> forward_pred;
  std::optional<double> backward_pred;
  /// Smallest deviation of the observation from the available predictions.
  double magnitude_estimate = 0.0;
  std::size_t iteration = 0;
};

struct DetectionResult {
  std::vector<OutlierFlag> flags;  // ordered by index
  TimeSeries cleaned;
  std::size_t iterations = 0;
};

/// Flags an epoch when the observation departs by more than `threshold` from
/// both the forward prediction (the n samples before it) and the backward
/// prediction (the n samples after it, run in reversed time). Epochs within n
/// of either end have only one prediction and are judged on it. Each pass
/// confirms its candidates from windows that skip the other candidates,
/// replaces confirmed values by the mean of those predictions, and repeats
/// until nothing new is flagged or `max_iterations` passes have run.
DetectionResult detect_outliers(const TimeSeries& series, const PipelineConfig& config,
                                double threshold, std::size_t max_iterations = 10,
                                std::size_t workers = 1);

/// Forward and backward one-step predictions for epoch `index` of `series`.
std::pair<std::optional<double>, std::optional<double>> bidirectional_predictions(
    const TimeSeries& series, std::size_t index, const PipelineConfig& config);

struct InjectionRecord {
  std::string series_id;
  std::vector<std::size_t> indices;  // ascending
  std::vector<double> magnitudes;    // signed, meters
  std::vector<double> original_values;  // before injection; may be empty
};

struct Injection {
  TimeSeries corrupted;
  InjectionRecord truth;
};

/// Adds `count` signed offsets with |offset| uniform in [min_mag, max_mag] at
/// distinct, uniformly drawn indices. Deterministic for a given seed.
Injection inject_outliers(const TimeSeries& series, std::size_t count, double min_mag,
                          double max_mag, std::uint64_t seed);

/// Puts the recorded original values back (or subtracts the offsets when the
/// record carries none).
TimeSeries remove_injections(const TimeSeries& corrupted, const InjectionRecord& truth);

struct DetectionScore {
  std::size_t injected_count = 0;
  std::size_t detected_count = 0;
  double success_rate = 0.0;  // percent
  std::size_t false_positive_count = 0;

  DetectionScore& operator+=(const DetectionScore& other);
};

/// A flag matches an injection at the same index.
DetectionScore score_detection(const InjectionRecord& truth, const std::vector<OutlierFlag>& flags);

struct CampaignConfig {
  std::size_t series_count = 50;
  std::size_t series_length = 240;
  std::size_t injections_per_series = 5;
  double min_magnitude = 0.02;
  double max_magnitude = 5.0;
  double threshold = 0.03;
  double noise_sigma = 0.005;
  double signal_amplitude = 0.02;
  double sampling_interval = 86400.0;
  std::uint64_t seed = 20110311;
  std::size_t max_iterations = 10;
  std::size_t workers = 1;
  PipelineConfig pipeline = default_pipeline();

  static PipelineConfig default_pipeline();
  /// Keys: series_count, series_length, injections (or injection_count),
  /// min_magnitude, max_magnitude, threshold, noise_sigma, signal_amplitude,
  /// sampling_interval, seed, max_iterations, workers, plus pipeline keys.
  static CampaignConfig from_config(const KeyValueConfig& kv, CampaignConfig base);
};

struct CampaignSeriesResult {
  InjectionRecord truth;
  DetectionResult detection;
  DetectionScore score;
};

struct CampaignResult {
  std::vector<CampaignSeriesResult> series;
  DetectionScore total;
  std::size_t epochs = 0;
  double false_positive_rate = 0.0;  // false positives per tested epoch
};

/// Model-space signals plus white noise, one per series in the campaign.
std::vector<TimeSeries> synthetic_corpus(const CampaignConfig& config);

/// Inject, detect and score every series of `corpus`.
CampaignResult run_campaign(const std::vector<TimeSeries>& corpus, const CampaignConfig& config);

}  // namespace gtsp
