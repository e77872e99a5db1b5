#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gtsp/key_value.hpp"
#include "gtsp/types.hpp"

namespace gtsp {

struct EventConfig {
  double step_threshold = 0.03;
  std::optional<double> event_threshold;  // default 10 x step_threshold
  std::size_t baseline_samples = 300;
  /// The training window ends this many samples after the departure index.
  std::size_t window_offset = 0;
  /// When set, n = round(fraction x samples up to the window end).
  std::optional<double> training_fraction;
  /// Forecast length; default is the rest of the series.
  std::optional<std::size_t> horizon;
  /// Absolute epoch of the observed event, for lead_time.
  std::optional<double> reference_event_time;

  double effective_event_threshold() const noexcept {
    return event_threshold.value_or(10.0 * step_threshold);
  }

  static EventConfig from_config(const KeyValueConfig& kv, EventConfig base);
};

struct EventReport {
  std::size_t departure_index = 0;
  double departure_epoch = 0.0;       // absolute
  double predicted_event_time = 0.0;  // absolute
  double predicted_first_motion = 0.0;
  std::optional<double> lead_time;
  double training_fraction = 0.0;
  double baseline = 0.0;
  std::size_t n_used = 0;
  std::size_t m_used = 0;
};

/// Smallest i >= 1 with |y_i - y_(i-1)| > step_threshold.
std::size_t find_departure(const TimeSeries& series, double step_threshold);

EventReport predict_event(const TimeSeries& series, const PipelineConfig& config,
                          const EventConfig& event);

/// reference - predicted; positive is an early warning.
inline double lead_time(double predicted_event_time, double reference_event_time) noexcept {
  return reference_event_time - predicted_event_time;
}

}  // namespace gtsp
