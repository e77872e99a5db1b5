#include "gtsp/event.hpp"

#include <cmath>
#include <numeric>

#include "gtsp/error.hpp"
#include "gtsp/predictor.hpp"

namespace gtsp {

EventConfig EventConfig::from_config(const KeyValueConfig& kv, EventConfig base) {
  base.step_threshold = kv.get_double("step_threshold", base.step_threshold);
  if (kv.contains("event_threshold")) base.event_threshold = kv.get_double("event_threshold", 0.0);
  base.baseline_samples = kv.get_size("baseline_samples", base.baseline_samples);
  base.window_offset = kv.get_size("window_offset", base.window_offset);
  if (kv.contains("training_fraction")) {
    base.training_fraction = kv.get_double("training_fraction", 1.0);
  }
  if (kv.contains("horizon")) base.horizon = kv.get_size("horizon", 0);
  if (kv.contains("reference_event_time")) {
    base.reference_event_time = kv.get_double("reference_event_time", 0.0);
  }
  return base;
}

std::size_t find_departure(const TimeSeries& series, double step_threshold) {
  if (series.size() < 2) {
    throw Error(ErrorCode::SeriesTooShort, "need at least 2 samples");
  }
  if (!(step_threshold > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "step_threshold must be positive");
  }
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (std::abs(series.samples[i].value - series.samples[i - 1].value) > step_threshold) return i;
  }
  throw Error(ErrorCode::NoDeparture, series.station_id);
}

EventReport predict_event(const TimeSeries& series, const PipelineConfig& config,
                          const EventConfig& event) {
  const double threshold = event.effective_event_threshold();
  if (!(threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "event_threshold must be positive");

  EventReport report;
  report.departure_index = find_departure(series, event.step_threshold);
  report.departure_epoch = series.absolute_epoch(report.departure_index);

  const std::size_t end = report.departure_index + event.window_offset;
  if (end >= series.size()) {
    throw Error(ErrorCode::SeriesTooShort, "training window runs past the series end");
  }
  const std::size_t available = end + 1;

  PipelineConfig cfg = config;
  if (event.training_fraction) {
    const double f = *event.training_fraction;
    if (!(f > 0.0 && f <= 1.0)) throw Error(ErrorCode::InvalidConfig, "training_fraction in (0, 1]");
    cfg.n = static_cast<std::size_t>(std::lround(f * static_cast<double>(available)));
  }
  if (cfg.n > available) {
    throw Error(ErrorCode::SeriesTooShort, "n = " + std::to_string(cfg.n) + " but only " +
                                               std::to_string(available) + " samples available");
  }
  report.n_used = cfg.n;
  report.training_fraction = static_cast<double>(cfg.n) / static_cast<double>(available);

  const std::size_t base_count = std::min(event.baseline_samples, report.departure_index);
  if (base_count == 0) throw Error(ErrorCode::InvalidConfig, "empty baseline");
  double sum = 0.0;
  for (std::size_t i = report.departure_index - base_count; i < report.departure_index; ++i) {
    sum += series.samples[i].value;
  }
  report.baseline = sum / static_cast<double>(base_count);

  const std::size_t q = event.horizon.value_or(series.size() - end - 1);
  if (q == 0) throw Error(ErrorCode::NoEventInHorizon, "empty horizon");
  const HorizonForecast fc =
      forecast_window(slice_window(series, end, cfg.n), cfg, q, series.sampling_interval);
  report.m_used = fc.models.front().m_used;

  std::vector<double> dev;
  dev.reserve(fc.predictions.size());
  for (const auto& s : fc.predictions) dev.push_back(s.value - report.baseline);

  std::size_t hit = dev.size();
  for (std::size_t k = 0; k < dev.size(); ++k) {
    if (std::abs(dev[k]) > threshold) {
      hit = k;
      break;
    }
  }
  if (hit == dev.size()) throw Error(ErrorCode::NoEventInHorizon, series.station_id);
  report.predicted_event_time = series.origin + fc.predictions[hit].t;

  // First turning point of the predicted deviation from the event sample on.
  std::size_t peak = dev.size() - 1;
  for (std::size_t k = hit + 1; k + 1 < dev.size(); ++k) {
    if ((dev[k] - dev[k - 1]) * (dev[k + 1] - dev[k]) <= 0.0) {
      peak = k;
      break;
    }
  }
  report.predicted_first_motion = std::abs(dev[peak]);

  if (event.reference_event_time) {
    report.lead_time = lead_time(report.predicted_event_time, *event.reference_event_time);
  }
  return report;
}

}  // namespace gtsp
