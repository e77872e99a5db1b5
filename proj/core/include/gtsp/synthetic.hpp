#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "gtsp/harmonic.hpp"
#include "gtsp/types.hpp"

namespace gtsp {

/// offset + rate t + sum_k t (c_k cos 2 pi f_k t + s_k sin 2 pi f_k t), i.e. a
/// signal that lives in the predictor's own model space.
struct HarmonicSignal {
  double offset = 0.0;
  double rate = 0.0;
  FrequencyGrid grid;
  BandCoefficients coeffs;

  double operator()(double t) const;
};

struct SignalSpec {
  double f0 = 1.0 / 86400.0;
  std::size_t grid_n = 64;     // window length the grid is built for
  std::size_t m = 3;
  double span = 0.0;           // seconds; coefficients are scaled so the
  double amplitude = 0.02;     // t-modulated terms reach ~amplitude at t = span
  double rate = 1e-9;          // m/s (~3 cm/yr)
  double offset = 0.0;
};

HarmonicSignal random_signal(const SignalSpec& spec, std::mt19937_64& rng);

/// Samples `signal` at t = 0, interval, 2 interval, ... and adds white noise
/// of standard deviation `noise_sigma`; sigma is attached when it is > 0.
TimeSeries sample_signal(const HarmonicSignal& signal, std::size_t count, double interval,
                         double noise_sigma, std::mt19937_64& rng, std::string station = "SYN0",
                         Component component = Component::U);

/// Mixes a base seed and a stream index into an independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace gtsp
