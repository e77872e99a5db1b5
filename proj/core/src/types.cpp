#include "gtsp/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "gtsp/error.hpp"

namespace gtsp {

std::string_view to_string(Component c) noexcept {
  switch (c) {
    case Component::X: return "X";
    case Component::Y: return "Y";
    case Component::Z: return "Z";
    case Component::E: return "E";
    case Component::N: return "N";
    case Component::U: return "U";
  }
  return "?";
}

std::optional<Component> parse_component(std::string_view label) noexcept {
  if (label.size() != 1) return std::nullopt;
  switch (std::toupper(static_cast<unsigned char>(label[0]))) {
    case 'X': return Component::X;
    case 'Y': return Component::Y;
    case 'Z': return Component::Z;
    case 'E': return Component::E;
    case 'N': return Component::N;
    case 'U': return Component::U;
    default: return std::nullopt;
  }
}

std::vector<double> TimeSeries::values() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.value);
  return out;
}

std::vector<double> TimeSeries::times() const {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.t);
  return out;
}

std::string_view to_string(WindowPolicy p) noexcept {
  return p == WindowPolicy::Sliding ? "sliding" : "growing";
}

std::optional<WindowPolicy> parse_window_policy(std::string_view s) noexcept {
  if (s == "sliding") return WindowPolicy::Sliding;
  if (s == "growing") return WindowPolicy::Growing;
  return std::nullopt;
}

std::size_t grid_power(std::size_t n) noexcept {
  std::size_t p = 1;
  while (p <= n) p <<= 1;
  return p;
}

void PipelineConfig::validate(std::optional<std::size_t> window_length) const {
  const std::size_t len = window_length.value_or(n);
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidConfig, msg); };
  if (n < 4) fail("n must be at least 4");
  if (len < n) fail("window shorter than n");
  if (!(f0 > 0.0) || !std::isfinite(f0)) fail("f0 must be positive");
  if (!(mse_threshold > 0.0)) fail("mse_threshold must be positive");
  if (!(rank_tolerance > 0.0 && rank_tolerance < 1.0)) fail("rank_tolerance must lie in (0, 1)");
  const std::size_t lo = search_begin();
  const std::size_t hi = search_end();
  if (lo < 1) fail("m must be at least 1");
  if (lo > hi) fail("m_min exceeds m_max");
  const std::size_t overdetermined = (len - 1) / 2;
  if (hi > overdetermined) {
    std::ostringstream os;
    os << "m_max " << hi << " exceeds floor((n-1)/2) = " << overdetermined;
    fail(os.str());
  }
  if (hi > grid_power(len) + 1) fail("m_max exceeds p + 1");
}

void Window::push_back(double t, double value, double weight) {
  times.push_back(t);
  values.push_back(value);
  weights.push_back(weight);
}

void Window::pop_front() {
  times.erase(times.begin());
  values.erase(values.begin());
  weights.erase(weights.begin());
}

TimeSeries validate_series(TimeSeries raw) {
  if (raw.samples.empty()) throw Error(ErrorCode::EmptySeries, raw.station_id);
  if (!(raw.sampling_interval > 0.0) || !std::isfinite(raw.sampling_interval)) {
    throw Error(ErrorCode::InvalidSamplingInterval, raw.station_id);
  }
  for (std::size_t i = 0; i < raw.samples.size(); ++i) {
    const Sample& s = raw.samples[i];
    if (!std::isfinite(s.t) || !std::isfinite(s.value)) {
      throw Error(ErrorCode::NonFiniteValue, "sample " + std::to_string(i));
    }
    if (s.sigma && !(*s.sigma > 0.0 && std::isfinite(*s.sigma))) {
      throw Error(ErrorCode::NonPositiveSigma, "sample " + std::to_string(i));
    }
    if (i > 0) {
      const double prev = raw.samples[i - 1].t;
      if (s.t == prev) throw Error(ErrorCode::DuplicateEpoch, "sample " + std::to_string(i));
      if (s.t < prev) throw Error(ErrorCode::UnsortedEpochs, "sample " + std::to_string(i));
    }
  }
  return raw;
}

double observation_weight(double sigma) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::NonPositiveSigma, std::to_string(sigma));
  return 1.0 / (sigma * sigma);
}

Window slice_window(const TimeSeries& series, std::size_t end_index, std::size_t n) {
  if (n == 0 || end_index >= series.size() || end_index + 1 < n) {
    throw Error(ErrorCode::WindowOutOfRange,
                "end " + std::to_string(end_index) + ", n " + std::to_string(n));
  }
  Window w;
  w.times.reserve(n);
  w.values.reserve(n);
  w.weights.reserve(n);
  for (std::size_t i = end_index + 1 - n; i <= end_index; ++i) {
    const Sample& s = series.samples[i];
    w.push_back(s.t, s.value, s.sigma ? observation_weight(*s.sigma) : 1.0);
  }
  return w;
}

}  // namespace gtsp
