#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtsp {

enum class Component { X, Y, Z, E, N, U };

std::string_view to_string(Component c) noexcept;
/// Parses a single-letter component label (case-insensitive).
std::optional<Component> parse_component(std::string_view label) noexcept;

/// One observation. `t` is seconds relative to the owning series' origin.
struct Sample {
  double t = 0.0;
  double value = 0.0;
  std::optional<double> sigma;

  friend bool operator==(const Sample&, const Sample&) = default;
};

/// One coordinate component of one station.
///
/// Epochs are stored relative to `origin` (absolute seconds in the source
/// time scale) so that the t-modulated basis stays well conditioned.
struct TimeSeries {
  std::string station_id;
  Component component = Component::U;
  std::vector<Sample> samples;
  double sampling_interval = 86400.0;
  double origin = 0.0;

  std::size_t size() const noexcept { return samples.size(); }
  bool empty() const noexcept { return samples.empty(); }
  double absolute_epoch(std::size_t i) const { return origin + samples[i].t; }

  std::vector<double> values() const;
  std::vector<double> times() const;
};

enum class WindowPolicy { Sliding, Growing };

std::string_view to_string(WindowPolicy p) noexcept;
std::optional<WindowPolicy> parse_window_policy(std::string_view s) noexcept;

/// Least power of two strictly greater than n.
std::size_t grid_power(std::size_t n) noexcept;

struct PipelineConfig {
  std::size_t n = 256;
  double f0 = 1.0 / 86400.0;
  std::optional<std::size_t> m_fixed;
  std::size_t m_min = 1;
  std::size_t m_max = 4;
  double mse_threshold = 1e-6;  // m^2, i.e. 1 mm RMS
  std::string wavelet = "haar";
  WindowPolicy window_policy = WindowPolicy::Sliding;
  // Refit on every auto-regressive step; false reuses the first model for
  // the whole horizon.
  bool refit_each_step = true;
  // Relative pivot threshold of the rank-revealing factorization.
  double rank_tolerance = 1e-10;

  /// Lowest and highest m the search will probe.
  std::size_t search_begin() const noexcept { return m_fixed ? *m_fixed : m_min; }
  std::size_t search_end() const noexcept { return m_fixed ? *m_fixed : m_max; }

  /// Throws Error(InvalidConfig) when the config cannot drive a window of
  /// `window_length` samples (defaults to n).
  void validate(std::optional<std::size_t> window_length = std::nullopt) const;
};

/// Training data handed to the predictor: absolute series epochs, values
/// and observation weights.
struct Window {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> weights;

  std::size_t size() const noexcept { return values.size(); }
  void push_back(double t, double value, double weight = 1.0);
  void pop_front();
};

/// Checks ordering and finiteness. Unsorted input is rejected rather than
/// reordered.
TimeSeries validate_series(TimeSeries raw);

/// w = 1 / sigma^2.
double observation_weight(double sigma);

/// The n samples ending at end_index (inclusive). Missing sigma gives weight 1.
Window slice_window(const TimeSeries& series, std::size_t end_index, std::size_t n);

}  // namespace gtsp
