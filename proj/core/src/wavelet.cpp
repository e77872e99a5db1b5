#include "gtsp/wavelet.hpp"

#include <array>
#include <cmath>
#include <string>

#include "gtsp/error.hpp"

namespace gtsp {
namespace {

const std::array<double, 2> kHaar = {0.70710678118654752440, 0.70710678118654752440};

// Daubechies, 2 vanishing moments: (1+s3, 3+s3, 3-s3, 1-s3) / (4 sqrt 2).
const std::array<double, 4> kDb2 = {
    0.48296291314453414337, 0.83651630373780790557,
    0.22414386804201338102, -0.12940952255126038117};

const std::array<double, 8> kDb4 = {
    0.23037781330885523, 0.7148465705525415,   0.6308807679295904,   -0.02798376941698385,
    -0.18703481171888114, 0.030841381835986965, 0.032883011666982945, -0.010597401784997278};

}  // namespace

bool is_known_wavelet(std::string_view wavelet) noexcept {
  return wavelet == "haar" || wavelet == "db1" || wavelet == "db2" || wavelet == "db4";
}

std::span<const double> scaling_filter(std::string_view wavelet) {
  if (wavelet == "haar" || wavelet == "db1") return kHaar;
  if (wavelet == "db2") return kDb2;
  if (wavelet == "db4") return kDb4;
  throw Error(ErrorCode::UnknownWavelet, std::string(wavelet));
}

BandPair decompose(std::span<const double> residuals, std::string_view wavelet) {
  const std::span<const double> h = scaling_filter(wavelet);
  const std::size_t n = residuals.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "decompose needs at least 2 samples");

  const std::size_t taps = h.size();
  std::vector<double> g(taps);
  for (std::size_t k = 0; k < taps; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    g[k] = sign * h[taps - 1 - k];
  }

  // x, reverse(x): period 2n, always even.
  const std::size_t period = 2 * n;
  auto ext = [&](std::size_t i) {
    i %= period;
    return i < n ? residuals[i] : residuals[period - 1 - i];
  };

  const std::size_t half = n;
  std::vector<double> approx(half, 0.0);
  std::vector<double> detail(half, 0.0);
  for (std::size_t i = 0; i < half; ++i) {
    double a = 0.0;
    double d = 0.0;
    for (std::size_t k = 0; k < taps; ++k) {
      const double x = ext(2 * i + k);
      a += h[k] * x;
      d += g[k] * x;
    }
    approx[i] = a;
    detail[i] = d;
  }

  // Synthesis is the adjoint of analysis; only the first n outputs are kept.
  BandPair out;
  out.low.assign(n, 0.0);
  out.high.assign(n, 0.0);
  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t k = 0; k < taps; ++k) {
      const std::size_t j = (2 * i + k) % period;
      if (j >= n) continue;
      out.low[j] += h[k] * approx[i];
      out.high[j] += g[k] * detail[i];
    }
  }
  return out;
}

}  // namespace gtsp
