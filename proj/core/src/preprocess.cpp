#include "gtsp/preprocess.hpp"

#include <numeric>

#include "gtsp/error.hpp"

namespace gtsp {

std::pair<Window, double> remove_mean(const Window& window) {
  if (window.size() == 0) throw Error(ErrorCode::EmptyWindow, "remove_mean");
  const double mean = std::accumulate(window.values.begin(), window.values.end(), 0.0) /
                      static_cast<double>(window.size());
  Window centered = window;
  for (double& v : centered.values) v -= mean;
  return {std::move(centered), mean};
}

DetrendedWindow remove_endpoint_trend(const Window& centered) {
  const std::size_t n = centered.size();
  if (n == 0) throw Error(ErrorCode::EmptyWindow, "remove_endpoint_trend");
  if (n < 2) throw Error(ErrorCode::DegenerateWindow, "need at least two samples");
  const double t_first = centered.times.front();
  const double t_last = centered.times.back() - t_first;
  if (!(t_last != 0.0)) throw Error(ErrorCode::DegenerateWindow, "coincident endpoint epochs");

  DetrendedWindow out;
  out.origin = t_first;
  out.weights = centered.weights;
  out.times.resize(n);
  out.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.times[i] = centered.times[i] - t_first;
  // The last relative time is recomputed through the same subtraction so the
  // endpoint identity below is exact.
  out.times.back() = t_last;

  const double y_first = centered.values.front();
  const double y_last = centered.values.back();
  const double b = (y_first - y_last) / (0.0 - t_last);
  const double a = -b * t_last + y_last;
  out.trend_a = a;
  out.trend_b = b;
  for (std::size_t i = 0; i < n; ++i) {
    out.residuals[i] = centered.values[i] - a - b * out.times[i];
  }
  // Both endpoints lie on the line by construction; pin them against the
  // last-bit rounding of a + b t.
  out.residuals.front() = 0.0;
  out.residuals.back() = 0.0;
  return out;
}

DetrendedWindow detrend(const Window& window) {
  auto [centered, mean] = remove_mean(window);
  DetrendedWindow out = remove_endpoint_trend(centered);
  out.mean = mean;
  return out;
}

double restore(double prediction_core, double t, const DetrendedWindow& detrended) noexcept {
  return prediction_core + detrended.trend_a + detrended.trend_b * t + detrended.mean;
}

}  // namespace gtsp
