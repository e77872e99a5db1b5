#pragma once

#include <cmath>
#include <random>
#include <string>

#include "gtsp/types.hpp"

namespace fixtures {

/// Daily series y_i = f(i) with no sigma, epochs starting at `origin`.
template <class F>
gtsp::TimeSeries daily(std::size_t count, F f, double origin = 0.0, std::string station = "TEST",
                       gtsp::Component comp = gtsp::Component::U) {
  gtsp::TimeSeries s;
  s.station_id = std::move(station);
  s.component = comp;
  s.sampling_interval = 86400.0;
  s.origin = origin;
  for (std::size_t i = 0; i < count; ++i) {
    s.samples.push_back({86400.0 * static_cast<double>(i), f(i), std::nullopt});
  }
  return s;
}

/// 1 Hz series: baseline, a 1 mm/s ramp from `ramp_start`, and a 5 m step at
/// `step_index`, plus optional white noise.
inline gtsp::TimeSeries ramp_step_event(std::size_t count, std::size_t ramp_start,
                                        std::size_t step_index, double noise, std::uint64_t seed,
                                        double step = 5.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, noise > 0.0 ? noise : 1.0);
  gtsp::TimeSeries s;
  s.station_id = "EVT1";
  s.component = gtsp::Component::E;
  s.sampling_interval = 1.0;
  s.origin = 452000.0;
  for (std::size_t i = 0; i < count; ++i) {
    double y = 0.1;
    if (i >= ramp_start) y += 0.001 * static_cast<double>(i - ramp_start);
    if (i >= step_index) y += step;
    if (noise > 0.0) y += g(rng);
    s.samples.push_back({static_cast<double>(i), y, std::nullopt});
  }
  return s;
}

}  // namespace fixtures
