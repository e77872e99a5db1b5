#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace gtsp {

struct BandPair {
  std::vector<double> low;
  std::vector<double> high;
};

/// Orthonormal scaling filter (analysis low-pass) for a wavelet identifier:
/// "haar", "db2" (4 taps) or "db4" (8 taps). Throws UnknownWavelet.
std::span<const double> scaling_filter(std::string_view wavelet);

bool is_known_wavelet(std::string_view wavelet) noexcept;

/// Single-level split of `residuals` into a low band (synthesis of the
/// approximation coefficients alone) and a high band (detail coefficients
/// alone). The signal is extended by half-sample symmetry to twice its length
/// and transformed periodically, so low + high reproduces the input for every
/// length n >= 2.
BandPair decompose(std::span<const double> residuals, std::string_view wavelet = "haar");

}  // namespace gtsp
