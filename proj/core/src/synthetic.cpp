#include "gtsp/synthetic.hpp"

#include <cmath>

namespace gtsp {

double HarmonicSignal::operator()(double t) const {
  return offset + rate * t + evaluate_band(coeffs, grid, t);
}

HarmonicSignal random_signal(const SignalSpec& spec, std::mt19937_64& rng) {
  HarmonicSignal s;
  s.offset = spec.offset;
  s.rate = spec.rate;
  s.grid = frequency_grid(spec.f0, spec.grid_n, spec.m);
  s.coeffs = BandCoefficients::zeros(spec.m);
  const double span = spec.span > 0.0 ? spec.span : static_cast<double>(spec.grid_n) / spec.f0;
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t k = 0; k < spec.m; ++k) {
    s.coeffs.cos_coeffs[k] = spec.amplitude * unit(rng) / span;
    s.coeffs.sin_coeffs[k] = spec.amplitude * unit(rng) / span;
  }
  return s;
}

TimeSeries sample_signal(const HarmonicSignal& signal, std::size_t count, double interval,
                         double noise_sigma, std::mt19937_64& rng, std::string station,
                         Component component) {
  TimeSeries ts;
  ts.station_id = std::move(station);
  ts.component = component;
  ts.sampling_interval = interval;
  ts.samples.reserve(count);
  std::normal_distribution<double> noise(0.0, noise_sigma > 0.0 ? noise_sigma : 1.0);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) * interval;
    double y = signal(t);
    std::optional<double> sigma;
    if (noise_sigma > 0.0) {
      y += noise(rng);
      sigma = noise_sigma;
    }
    ts.samples.push_back(Sample{t, y, sigma});
  }
  return ts;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  // splitmix64 finaliser
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace gtsp
